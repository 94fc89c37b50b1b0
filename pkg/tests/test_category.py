from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from paperlab.category import (
    CategoryError,
    FinCat,
    cat_product,
    discrete,
    face_poset,
    find_isomorphism,
    has_terminal_object,
    initial_objects,
    is_isomorphic,
    morphism_category,
    opposite,
    ordinal,
    terminal_objects,
)
from paperlab.corpus import random_directed_category, square


@pytest.mark.parametrize("n", range(5))
def test_ordinal_counts(n):
    C = ordinal(n)
    C.validate()
    # [DERIVED] pairs i <= j
    assert C.size() == (n + 1, comb(n + 2, 2))


def test_face_poset():
    F = face_poset(2)
    F.validate()
    assert len(F.objects) == 7
    # [DERIVED] comparable pairs of nonempty faces: sum over faces of number of subfaces
    assert len(F.morphisms) == 3 * 1 + 3 * 3 + 1 * 7


def test_discrete_and_terminal():
    D = discrete("abc")
    assert D.size() == (3, 3)
    assert terminal_objects(ordinal(3)) == [3]
    assert initial_objects(ordinal(3)) == [0]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_morphism_category(n):
    M = morphism_category(ordinal(n))
    M.validate()
    # objects are the arrows i <= j of [n]
    assert len(M.objects) == comb(n + 2, 2)
    # the arrow from the initial to the terminal object is terminal
    assert has_terminal_object(M) == (0, n)


def test_morphism_category_of_arrow_has_no_initial_object():
    # used to explain the barycenter analysis: [1]' has a terminal but no initial object
    M = morphism_category(ordinal(1))
    assert initial_objects(M) == []


def test_opposite_involution():
    C = square()
    assert find_isomorphism(opposite(opposite(C)), C) is not None
    assert opposite(ordinal(2)).comp((0, 1), (1, 2)) == (0, 2)


def test_product():
    P = cat_product(ordinal(1), ordinal(2))
    P.validate()
    assert P.size() == (6, 3 * 6)


def test_validate_rejects_bad_composition():
    C = ordinal(2)
    comp = {((1, 2), (0, 1)): (0, 1)}
    with pytest.raises(CategoryError):
        FinCat(C.objects, C.morphisms, C.identities, comp, check=True)


def test_isomorphism_search():
    assert is_isomorphic(square(), cat_product(ordinal(1), ordinal(1)))
    assert not is_isomorphic(square(), ordinal(3))
    assert is_isomorphic(ordinal(2), opposite(ordinal(2)))


@given(st.integers(0, 200))
def test_random_directed_category_laws(seed):
    C = random_directed_category(seed)
    C.validate()
    assert 1 <= len(C.objects) <= 6
    assert C.is_directed()

from math import comb

import pytest

from paperlab.category import cat_product, face_poset, find_isomorphism, ordinal
from paperlab.corpus import categories, square
from paperlab.homology import homology
from paperlab.nerve import (
    InfiniteNerve,
    cat,
    cat_nerve_counit,
    cat_product_comparison,
    cat_pushout,
    collapse_functor,
    inclusion_functor,
    nerve,
    nerve_cat_unit,
    nerve_map,
)
from paperlab.presentation import CatPresentation, realize_presentation
from paperlab.sset import boundary, product, simplex_mod_boundary, standard_simplex


@pytest.mark.parametrize("n", range(4))
def test_nerve_of_ordinal_is_simplex(n):
    N = nerve(ordinal(n))
    N.validate()
    assert N.f_vector() == tuple(comb(n + 1, k + 1) for k in range(n + 1))


def test_nerve_of_face_poset_is_sd():
    from paperlab.subdivide import sd
    from paperlab.sset import is_isomorphic
    assert is_isomorphic(nerve(face_poset(2)), sd(standard_simplex(2)))


def test_nerve_refuses_cycles():
    P = CatPresentation([0], {"x": (0, 0)})
    P.add_relation(("x", "x"), ("x",))
    with pytest.raises(InfiniteNerve):
        nerve(realize_presentation(P))


@pytest.mark.parametrize("entry", categories(5), ids=lambda e: e.name)
def test_counit_is_iso(entry):
    eps = cat_nerve_counit(entry.obj)
    eps.validate()
    assert eps.is_isomorphism()


def test_cat_of_boundary_and_quotient():
    # cat of the boundary of Delta^2 is [2] with the long edge freely added
    C = cat(boundary(2)[0])
    assert C.size() == (3, 7)
    assert cat(simplex_mod_boundary(2)).size() == (1, 1)


@pytest.mark.parametrize("S,T", [(standard_simplex(1), standard_simplex(1)),
                                 (boundary(2)[0], standard_simplex(1))])
def test_cat_preserves_products(S, T):
    phi = cat_product_comparison(S, T)
    phi.validate()
    assert phi.is_isomorphism()


def test_unit_is_map():
    eta = nerve_cat_unit(boundary(2)[0])
    eta.validate()


def test_nerve_preserves_products():
    from paperlab.sset import is_isomorphic
    assert is_isomorphic(nerve(cat_product(ordinal(1), ordinal(1))), product(standard_simplex(1), standard_simplex(1)))


def test_cat_pushout_collapse():
    A = ordinal(1)
    X = ordinal(2)
    inc = inclusion_functor(A, X)
    P, legX, legY = cat_pushout(inc, collapse_functor(A))
    legX.validate()
    # collapsing 0 -> 1 in [2] leaves an arrow
    assert find_isomorphism(P, ordinal(1)) is not None


def test_nerve_map_validates():
    f = nerve_map(collapse_functor(square()))
    f.validate()
    assert homology(f.target).is_point()

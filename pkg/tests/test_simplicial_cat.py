import pytest

from paperlab.category import ordinal
from paperlab.coend import TruncationTooSmall
from paperlab.corpus import simplicial_categories
from paperlab.nerve import nerve
from paperlab.simplicial_cat import (
    REALIZATIONS,
    constant_scat,
    diag_nerve,
    discrete_scat,
    product_scat,
    realization_functor,
)
from paperlab.sset import is_isomorphic, product, simplex_mod_boundary, standard_simplex


@pytest.mark.parametrize("entry", simplicial_categories(), ids=lambda e: e.name)
def test_corpus_functoriality(entry):
    entry.obj.validate(upto=3)


@pytest.mark.parametrize("tag", REALIZATIONS)
def test_realization_functors_are_cosimplicial(tag):
    D = realization_functor(tag, 2)
    D.validate()


def test_realization_level_sizes():
    assert realization_functor("D1", 2).level(2).size() == ordinal(2).size()
    assert realization_functor("D0", 2).level(2).size() == (1, 1)
    assert realization_functor("D2", 2).level(2).size() == (25, 85)
    with pytest.raises(TruncationTooSmall):
        realization_functor("D1", 1).level(2)


def test_diag_of_discrete_is_identity():
    S = simplex_mod_boundary(2)
    assert is_isomorphic(diag_nerve(discrete_scat(S)), S)


def test_diag_of_constant_is_nerve():
    K = ordinal(2)
    assert is_isomorphic(diag_nerve(constant_scat(K)), nerve(K))


def test_diag_of_product():
    A = constant_scat(ordinal(1))
    B = discrete_scat(standard_simplex(1))
    assert is_isomorphic(diag_nerve(product_scat(A, B)), product(nerve(ordinal(1)), standard_simplex(1)))

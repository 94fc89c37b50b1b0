import pytest

from paperlab.category import cat_product, find_isomorphism, ordinal
from paperlab.coend import TruncationTooSmall
from paperlab.corpus import simplicial_categories
from paperlab.homology import sphere_homology, HomologyResult
from paperlab.nerve import cat
from paperlab.realize import F, goodness_check, realize
from paperlab.simplicial_cat import constant_scat, diag_nerve, discrete_scat, product_scat, realization_functor
from paperlab.sset import boundary, simplex_mod_boundary, standard_simplex
from paperlab.subdivide import sd

SC = {e.name: e.obj for e in simplicial_categories()}


def test_d0_is_point_on_connected():
    assert F("D0", SC["disc Delta^2/boundary"]).size() == (1, 1)


def test_d1_of_discrete_is_cat():
    S = boundary(2)[0]
    assert find_isomorphism(F("D1", discrete_scat(S)), cat(S)) is not None


def test_d1_of_constant_is_the_category():
    K = ordinal(2)
    assert find_isomorphism(F("D1", constant_scat(K)), K) is not None


@pytest.mark.parametrize("name", ["disc Delta^2", "disc boundary Delta^2", "disc Delta^2/boundary"])
def test_d2_identity_on_discrete(name):
    C = SC[name]
    assert find_isomorphism(F("D2", C), cat(sd(sd(diag_nerve(C))))) is not None


@pytest.mark.parametrize("tag", ["D1", "D3", "D4"])
def test_product_preservation(tag):
    A = discrete_scat(standard_simplex(1), "A")
    B = constant_scat(ordinal(1), "B")
    lhs = F(tag, product_scat(A, B))
    rhs = cat_product(F(tag, A), F(tag, B))
    assert find_isomorphism(lhs, rhs) is not None


def test_d2_is_not_product_preserving():
    A = discrete_scat(standard_simplex(1), "A")
    lhs = F("D2", product_scat(A, A))
    rhs = cat_product(F("D2", A), F("D2", A))
    assert lhs.size() != rhs.size()


def test_goodness_d1_fails_on_quotient():
    r = goodness_check("D1", SC["disc Delta^2/boundary"])
    assert r["verdict"] == "mismatch"
    assert HomologyResult.from_table(r["left"]).is_point()
    assert HomologyResult.from_table(r["right"]) == sphere_homology(2)


@pytest.mark.parametrize("entry", simplicial_categories(), ids=lambda e: e.name)
def test_goodness_d2_on_corpus(entry):
    assert goodness_check("D2", entry.obj)["verdict"] == "match"


def test_goodness_reports_infinite_realization():
    r = goodness_check("D1", discrete_scat(simplex_mod_boundary(1)))
    assert r["verdict"] == "mismatch" and r["left"] == "infinite category"


def test_truncation_too_small():
    C = SC["disc Delta^2"]
    with pytest.raises(TruncationTooSmall):
        realize(C, realization_functor("D1", 2), trunc=1)
    with pytest.raises(TruncationTooSmall):
        realize(C, realization_functor("D1", 1), trunc=2)


def test_d3_on_circle_keeps_the_loop():
    # [DERIVED] ssd of the boundary of Delta^1 is two points, so collapsing it
    # leaves two parallel arrows into the middle vertex: a circle, not a point
    r = goodness_check("D3", discrete_scat(simplex_mod_boundary(1)))
    assert r["witness"]["realization_size"] == [2, 4]
    assert HomologyResult.from_table(r["left"]) == sphere_homology(1)

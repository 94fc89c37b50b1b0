import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from paperlab.category import cat_product, find_isomorphism, opposite, ordinal
from paperlab.corpus import square
from paperlab.homology import homology
from paperlab.nerve import nerve
from paperlab.twosided import (
    NotLevelwiseEquivalence,
    NatTrans,
    associativity_map,
    coend_compat,
    collapse_transformation,
    constant_diagram,
    counit,
    grothendieck,
    heggie_invariance_check,
    identity_transformation,
    point_comparison,
    point_diagram,
    random_heggie_instance,
    random_poset_relation,
    ranked_poset_diagram,
    two_sided,
    two_sided_map,
)

INDEX = {"[1]": ordinal(1), "[2]": ordinal(2), "square": square()}


def _rel(rng, n=3):
    return random_poset_relation(rng, n, 0.5)


@pytest.mark.parametrize("name", INDEX)
def test_point_comparison(name):
    phi = point_comparison(INDEX[name])
    phi.validate()
    assert phi.is_isomorphism()


@given(st.sampled_from(sorted(INDEX)), st.integers(0, 10 ** 6))
def test_object_count_and_laws(name, seed):
    rng = random.Random(seed)
    K = INDEX[name]
    Fd = ranked_poset_diagram(K, _rel(rng), 3, contravariant=True)
    G = ranked_poset_diagram(K, _rel(rng), 3)
    Fd.validate()
    G.validate()
    C = two_sided(Fd, K, G)
    C.validate()
    # [DERIVED] objects are triples (x, k, y) with x in F(k), y in G(k)
    assert len(C.objects) == sum(len(Fd(k).objects) * len(G(k).objects) for k in K.objects)


def test_grothendieck_of_constant_point():
    K = ordinal(2)
    assert find_isomorphism(grothendieck(K, point_diagram(K)), K) is not None


@pytest.mark.parametrize("kn,ln", [("[1]", "[1]"), ("[1]", "[2]"), ("square", "[1]")])
def test_associativity(kn, ln):
    rng = random.Random(1)
    K, L = INDEX[kn], INDEX[ln]
    Fd = ranked_poset_diagram(K, _rel(rng), 2, contravariant=True)
    G = ranked_poset_diagram(cat_product(K, opposite(L)), _rel(rng), 2)
    H = ranked_poset_diagram(L, _rel(rng), 2)
    phi = associativity_map(Fd, K, G, L, H)
    phi.validate()
    assert phi.is_isomorphism()


def test_coend_compatibility():
    rng = random.Random(2)
    A = B = K = ordinal(1)
    U = ranked_poset_diagram(A, _rel(rng), 2, contravariant=True)
    V = ranked_poset_diagram(B, _rel(rng), 2)
    Fd = ranked_poset_diagram(cat_product(A, opposite(K)), _rel(rng), 2)
    G = ranked_poset_diagram(cat_product(K, opposite(B)), _rel(rng), 2)
    left, right = coend_compat(U, Fd, A, K, G, B, V)
    assert find_isomorphism(left, right) is not None


def test_coend_compatibility_trivial():
    A = B = ordinal(0)
    K = ordinal(2)
    left, right = coend_compat(point_diagram(opposite(A)), constant_diagram(cat_product(A, opposite(K))), A, K,
                               constant_diagram(cat_product(K, opposite(B))), B, point_diagram(B))
    assert find_isomorphism(left, K) is not None
    assert find_isomorphism(right, K) is not None


@pytest.mark.parametrize("name", INDEX)
def test_counit(name):
    K = INDEX[name]
    G = ranked_poset_diagram(K, [(0, 1), (1, 2), (0, 2)], 3)
    for k in K.objects:
        c = counit(K, G, k)
        c.eps.validate()
        c.section.validate()
        assert c.section_law()
        assert c.tau_is_natural()
        assert c.homology_equivalence()


def test_identity_transformations_are_invariant():
    K = ordinal(1)
    Fd = ranked_poset_diagram(K, [(0, 1)], 2, contravariant=True)
    G = ranked_poset_diagram(K, [(0, 1)], 2)
    r = heggie_invariance_check(identity_transformation(Fd), identity_transformation(G))
    assert r["verdict"] == "match"


def test_collapse_of_contractible_levels():
    K = ordinal(1)
    Fd = ranked_poset_diagram(K, [(0, 1)], 2, contravariant=True)
    G = ranked_poset_diagram(K, [(0, 1)], 2)
    r = heggie_invariance_check(collapse_transformation(Fd), identity_transformation(G))
    assert r["verdict"] == "match"


def test_rejects_non_equivalence():
    K = ordinal(1)
    # two-point discrete levels collapsed to a point: not a homology equivalence
    Fd = ranked_poset_diagram(K, [], 2)
    with pytest.raises(NotLevelwiseEquivalence):
        heggie_invariance_check(collapse_transformation(Fd), identity_transformation(point_diagram(K)))


@given(st.integers(0, 10 ** 4), st.sampled_from([1, 2]))
def test_heggie_property(seed, n):
    beta, gamma = random_heggie_instance(seed, ordinal(n), max_size=2)
    assert heggie_invariance_check(beta, gamma)["verdict"] == "match"


def test_two_sided_map_is_functor():
    beta, gamma = random_heggie_instance(5, ordinal(1))
    phi = two_sided_map(beta, gamma)
    phi.validate()
    assert homology(nerve(phi.source)) == homology(nerve(phi.target))

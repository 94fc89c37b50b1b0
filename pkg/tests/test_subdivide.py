from itertools import combinations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from paperlab.category import ordinal
from paperlab.corpus import ssets, square
from paperlab.homology import homology
from paperlab.nerve import nerve
from paperlab.sset import boundary, product, standard_simplex
from paperlab.subdivide import (
    Subdivided,
    barycenter,
    check_operator_formulas,
    esd,
    iterate,
    iterate_map,
    sd,
    ssd,
    ssd_nerve_comparison,
    subdivision_product_check,
    support,
    vertex_coordinates,
)


def _chain_counts(n):
    """Independent oracle: chains of nonempty faces of Delta^n by length."""
    faces = [frozenset(c) for k in range(1, n + 2) for c in combinations(range(n + 1), k)]
    counts = [0] * (n + 1)
    chains = [[f] for f in faces]
    while chains:
        counts[len(chains[0]) - 1] += len(chains)
        chains = [c + [g] for c in chains for g in faces if c[-1] < g]
    return tuple(counts)


@pytest.mark.parametrize("n", range(4))
def test_sd_simplex_counts(n):
    assert sd(standard_simplex(n)).f_vector() == _chain_counts(n)


@pytest.mark.parametrize("kind", ["esd", "ssd"])
@pytest.mark.parametrize("n", range(4))
def test_edgewise_vertices(kind, n):
    # [DERIVED] vertices are the 1-simplices of Delta^n, degenerate ones included
    X = iterate(kind, 1, standard_simplex(n))
    X.validate()
    assert len(X.simplices(0)) == comb(n + 2, 2)
    assert homology(X).is_point()


@pytest.mark.parametrize("kind", ["esd", "ssd"])
def test_operator_formulas(kind):
    assert check_operator_formulas(kind, upto=7)


@pytest.mark.parametrize("entry", ssets(), ids=lambda e: e.name)
@pytest.mark.parametrize("op", [sd, esd, ssd], ids=["sd", "esd", "ssd"])
def test_subdivision_preserves_homology(entry, op):
    X = op(entry.obj)
    X.validate()
    assert homology(X) == homology(entry.obj)
    assert X.euler_characteristic() == entry.obj.euler_characteristic()


def test_sd_product_counts():
    I = standard_simplex(1)
    assert len(sd(product(I, I)).simplices(0)) == 11
    assert len(product(sd(I), sd(I)).simplices(0)) == 9
    ok, w = subdivision_product_check("sd", I, I)
    assert not ok and w["vertices"] == [11, 9]


@pytest.mark.parametrize("kind", ["esd", "ssd"])
@pytest.mark.parametrize("S,T", [(standard_simplex(1), standard_simplex(1)),
                                 (standard_simplex(1), boundary(2)[0])])
def test_edgewise_product(kind, S, T):
    ok, _ = subdivision_product_check(kind, S, T)
    assert ok


@pytest.mark.parametrize("C", [ordinal(1), ordinal(2), square()], ids=["[1]", "[2]", "square"])
def test_ssd_nerve(C):
    f = ssd_nerve_comparison(C)
    f.validate()
    assert f.is_isomorphism()


def test_functoriality():
    B, inc = boundary(2)
    for kind in ("sd", "esd", "ssd"):
        f = Subdivided(kind, B).map_to(inc, Subdivided(kind, inc.target))
        f.validate()
        assert f.is_injective()
    g = iterate_map("ssd", 2, inc)
    g.validate()


@pytest.mark.parametrize("k,n", [(1, 1), (1, 2), (2, 1), (2, 3)])
def test_support_bound(k, n):
    _, coords = vertex_coordinates("ssd", k, n)
    assert all(sum(p) == 1 for p in coords.values())
    assert max(support(p) for p in coords.values()) <= 2 ** k


def test_barycenter_of_ssd_edge():
    _, coords = vertex_coordinates("ssd", 1, 1)
    assert sum(1 for p in coords.values() if p == barycenter(1)) == 1


def test_unknown_kind():
    with pytest.raises(ValueError):
        Subdivided("xsd", standard_simplex(1))


@given(st.integers(0, 3))
def test_ssd_of_nerve_vertices(n):
    # vertices of ssd N[n] are the arrows of [n]
    assert len(ssd(nerve(ordinal(n))).simplices(0)) == comb(n + 2, 2)

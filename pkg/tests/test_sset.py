from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from paperlab.homology import homology, sphere_homology
from paperlab.sset import (
    SSetError,
    UnsupportedPushout,
    boundary,
    diag,
    BiSSet,
    is_isomorphic,
    point,
    product,
    product_with_projections,
    pushout,
    simplex_mod_boundary,
    standard_simplex,
)
from paperlab.examples import to_point


@pytest.mark.parametrize("n", range(5))
def test_standard_simplex_f_vector(n):
    # [DERIVED] nondegenerate k-simplices of Delta^n are (k+1)-subsets
    assert standard_simplex(n).f_vector() == tuple(comb(n + 1, k + 1) for k in range(n + 1))


@pytest.mark.parametrize("n", range(1, 4))
def test_boundary(n):
    B, inc = boundary(n)
    inc.validate()
    assert inc.is_injective()
    assert B.f_vector() == standard_simplex(n).f_vector()[:-1]
    assert homology(B) == sphere_homology(n - 1)


@pytest.mark.parametrize("p,q", [(1, 1), (1, 2), (2, 2)])
def test_product_counts(p, q):
    # [DERIVED] Delta^p x Delta^q has C(p+q, p) top simplices and (p+1)(q+1) vertices
    P = product(standard_simplex(p), standard_simplex(q))
    P.validate()
    assert len(P.simplices(0)) == (p + 1) * (q + 1)
    assert len(P.simplices(p + q)) == comb(p + q, p)
    assert homology(P).is_point()


def test_product_projections_validate():
    P, p1, p2 = product_with_projections(boundary(2)[0], standard_simplex(1))
    p1.validate()
    p2.validate()
    assert P.euler_characteristic() == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_quotient_is_sphere(n):
    Q = simplex_mod_boundary(n)
    Q.validate()
    assert Q.f_vector() == (1,) + (0,) * (n - 1) + (1,)
    assert homology(Q) == sphere_homology(n)


def test_pushout_collapsing_boundary():
    B, inc = boundary(2)
    P, jx, jy = pushout(inc, to_point(B))
    jx.validate()
    assert homology(P) == sphere_homology(2)
    assert is_isomorphic(P, simplex_mod_boundary(2))


def test_pushout_needs_common_source():
    B, inc = boundary(2)
    with pytest.raises((UnsupportedPushout, SSetError, ValueError)):
        pushout(inc, to_point(boundary(2)[0]))


def test_diag_of_external_product():
    S, T = standard_simplex(1), boundary(2)[0]
    D = diag(BiSSet.external_product(S, T))
    assert is_isomorphic(D, product(S, T))


def test_point():
    assert point().f_vector() == (1,)


@given(st.integers(0, 3), st.integers(0, 2))
def test_euler_characteristic_multiplicative(a, b):
    S, T = standard_simplex(a), boundary(b + 1)[0]
    assert product(S, T).euler_characteristic() == S.euler_characteristic() * T.euler_characteristic()

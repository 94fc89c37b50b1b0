from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from paperlab.delta import (
    CompositionMismatch,
    MonotoneMap,
    all_maps,
    codegeneracy,
    coface,
    compose,
    ez_factorize,
    identity,
    injections,
    reverse,
    surjections,
)


@st.composite
def monotone(draw, src=None, dst=None):
    n = draw(st.integers(0, 4)) if src is None else src
    m = draw(st.integers(0, 4)) if dst is None else dst
    vals = sorted(draw(st.lists(st.integers(0, m), min_size=n + 1, max_size=n + 1)))
    return MonotoneMap(tuple(vals), m)


def test_rejects_non_monotone():
    with pytest.raises(ValueError):
        MonotoneMap((1, 0), 1)
    with pytest.raises(ValueError):
        MonotoneMap((0, 3), 2)


def test_compose_mismatch():
    with pytest.raises(CompositionMismatch):
        compose(identity(2), identity(1))


@pytest.mark.parametrize("n,m", [(0, 0), (1, 2), (2, 2), (3, 1), (2, 4)])
def test_counts_match_binomials(n, m):
    # [DERIVED] monotone maps [n]->[m] are multisets of size n+1 from m+1 values
    assert len(list(all_maps(n, m))) == comb(n + m + 1, n + 1)
    assert len(list(injections(n, m))) == comb(m + 1, n + 1)
    assert len(surjections(m, n)) == (comb(m, n) if m >= n else 0)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_cosimplicial_identities(n):
    # d^j d^i = d^i d^(j-1) for i < j
    for j in range(n + 1):
        for i in range(j):
            assert compose(coface(n, j), coface(n - 1, i)) == compose(coface(n, i), coface(n - 1, j - 1))
    # s^j s^i = s^i s^(j+1) for i <= j
    for j in range(n):
        for i in range(j + 1):
            assert compose(codegeneracy(n - 1, j), codegeneracy(n, i)) == \
                compose(codegeneracy(n - 1, i), codegeneracy(n, j + 1))
    # s^j d^i
    for j in range(n):
        for i in range(n + 1):
            lhs = compose(codegeneracy(n - 1, j), coface(n, i))
            if i < j:
                rhs = compose(coface(n - 1, i), codegeneracy(n - 2, j - 1)) if n >= 2 else None
            elif i in (j, j + 1):
                rhs = identity(n - 1)
            else:
                rhs = compose(coface(n - 1, i - 1), codegeneracy(n - 2, j)) if n >= 2 else None
            if rhs is not None:
                assert lhs == rhs


@given(monotone())
def test_ez_factorization(f):
    ez = ez_factorize(f)
    assert ez.surjection.is_surjective()
    assert ez.injection.is_injective()
    assert compose(ez.injection, ez.surjection) == f


@given(st.data())
def test_composition_associative(data):
    a, b, c, d = (data.draw(st.integers(0, 3)) for _ in range(4))
    f = data.draw(monotone(a, b))
    g = data.draw(monotone(b, c))
    h = data.draw(monotone(c, d))
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)
    assert compose(identity(b), f) == f == compose(f, identity(a))


@given(monotone())
def test_reverse_is_involution(f):
    assert reverse(reverse(f)) == f

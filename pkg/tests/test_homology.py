import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from paperlab.homology import (
    HomologyResult,
    chain_complex,
    homology,
    is_homology_equivalence,
    smith_invariants,
    sphere_homology,
)
from paperlab.delta import MonotoneMap
from paperlab.sset import boundary, product, simplex_mod_boundary, standard_simplex, standard_simplex_map


def _sympy_invariants(rows, ncols):
    """Independent oracle: nonzero diagonal of sympy's Smith normal form."""
    if not rows or not ncols:
        return []
    M = sympy.Matrix(rows)
    from sympy.matrices.normalforms import smith_normal_form
    D = smith_normal_form(M, domain=sympy.ZZ)
    return sorted(abs(int(D[i, i])) for i in range(min(D.shape)) if D[i, i] != 0)


def _sparse(rows):
    return {i: {j: v for j, v in enumerate(r) if v} for i, r in enumerate(rows)}


@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 10 ** 6))
def test_smith_matches_sympy(nr, nc, seed):
    rng = random.Random(seed)
    rows = [[rng.choice([0, 0, 1, -1, 2, 3, -4, 6]) for _ in range(nc)] for _ in range(nr)]
    assert sorted(smith_invariants(_sparse(rows), nc)) == _sympy_invariants(rows, nc)


def test_smith_known_torsion():
    assert sorted(smith_invariants(_sparse([[2, 0], [0, 3]]), 2)) == [1, 6]


def test_projective_plane_torsion():
    # minimal 6-vertex triangulation of RP^2: H = (Z, Z/2, 0)
    from itertools import combinations

    from paperlab.sset import NSimplex, SSet

    tris = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5), (1, 2, 4), (2, 3, 5), (1, 3, 4), (1, 3, 5),
            (2, 4, 5)]
    simplices = set()
    for t in tris:
        for k in range(1, 4):
            simplices.update(combinations(t, k))
    faces = {}
    for s in simplices:
        n = len(s) - 1
        faces[s] = [] if n == 0 else [NSimplex(MonotoneMap(tuple(range(n)), n - 1), s[:i] + s[i + 1:])
                                      for i in range(n + 1)]
    H = homology(SSet(faces))
    assert H.betti[:2] == (1, 0) and H.torsion[1] == (2,)
    assert H.rank(2) == 0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_spheres(n):
    assert homology(boundary(n + 1)[0]) == sphere_homology(n)
    assert homology(simplex_mod_boundary(n)) == sphere_homology(n)


def test_torus():
    S1 = simplex_mod_boundary(1)
    H = homology(product(S1, S1))
    assert H.betti == (1, 2, 1)


def test_square_zero_and_truncation():
    C = chain_complex(product(standard_simplex(1), boundary(2)[0]))
    C.check_square_zero()
    H = homology(boundary(3)[0], top=1)
    assert H.is_point()


def test_table_roundtrip():
    H = sphere_homology(3)
    assert HomologyResult.from_table(H.table()) == H
    assert str(H).startswith("H0=Z")


def test_homology_equivalence_of_inclusion():
    # a vertex of a simplex is a homology equivalence, the boundary inclusion is not
    assert is_homology_equivalence(standard_simplex_map(MonotoneMap((2,), 2)))
    assert not is_homology_equivalence(boundary(2)[1])

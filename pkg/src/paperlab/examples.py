"""Worked examples: collapsing boundaries, the hexagon pushout and the
subdivided-simplex pushouts, each as a report comparing a Cat-side nerve
with the corresponding simplicial-set construction.
"""
from __future__ import annotations

from typing import Optional

from .category import FinCat, has_terminal_object, poset
from .homology import HomologyResult, homology, sphere_homology
from .nerve import InfiniteNerve, cat, cat_map, cat_pushout, collapse_functor, inclusion_functor, nerve, nerve_map
from .presentation import DEFAULT_BOUND, ClosureBoundExceeded
from .delta import MonotoneMap
from .sset import NSimplex, SSet, SSetMap, boundary, point, pushout, simplex_mod_boundary
from .subdivide import iterate_map


def report(check: str, inputs: dict, left: Optional[HomologyResult], right: HomologyResult,
           expect_match: bool, witness: dict = None) -> dict:
    """Report dictionary; ``left=None`` stands for an infinite nerve."""
    verdict = "match" if left is not None and left == right else "mismatch"
    return {
        "check": check,
        "inputs": inputs,
        "left": left.table() if left is not None else "infinite nerve",
        "right": right.table(),
        "verdict": verdict,
        "witness": witness or {},
        "expected": "match" if expect_match else "mismatch",
        "agrees_with_claim": (verdict == "match") == expect_match,
    }


def collapse_example(n: int, bound: int = DEFAULT_BOUND) -> dict:
    """``N cat(Delta^n/boundary)`` is a point while the quotient is ``S^n``."""
    Q = simplex_mod_boundary(n)
    C = cat(Q, bound)
    left = homology(nerve(C))
    right = homology(Q)
    witness = {"cat_size": list(C.size()), "quotient_f_vector": list(Q.f_vector()),
               "nerve_is_point": C.size() == (1, 1)}
    return report("N cat(Delta^n/boundary) vs Delta^n/boundary", {"n": n}, left, right, False, witness)


# ---------------------------------------------------------------------------
# The hexagon


HEX_CORNERS = ((0, 0), (8, 0), (4, 8))
HEX_MIDPOINTS = ((4, 0), (2, 4), (6, 4))
HEX_CENTER = (4, 3)


def _hex_edges():
    # each corner maps to the two midpoints of its sides
    return [((0, 0), (4, 0)), ((0, 0), (2, 4)), ((8, 0), (4, 0)), ((8, 0), (6, 4)),
            ((4, 8), (2, 4)), ((4, 8), (6, 4))]


def hexagon() -> FinCat:
    """The zigzag hexagon poset: three corners each below two side midpoints."""
    rel = set(_hex_edges())
    C = poset(HEX_CORNERS + HEX_MIDPOINTS, lambda a, b: a == b or (a, b) in rel)
    C.name = "hexagon"
    return C


def hexagon_cone() -> FinCat:
    """The hexagon with a center that every vertex maps to."""
    rel = set(_hex_edges())
    C = poset(HEX_CORNERS + HEX_MIDPOINTS + (HEX_CENTER,),
              lambda a, b: a == b or (a, b) in rel or b == HEX_CENTER)
    C.name = "hexagon cone"
    return C


def hexagon_pushout(bound: int = DEFAULT_BOUND) -> dict:
    """Collapse the hexagon inside its cone, in Cat and in simplicial sets.

    The Cat pushout is an arrow, whose nerve is contractible; the pushout of
    nerves is the cone modulo its base, a 2-sphere.
    """
    H, X = hexagon(), hexagon_cone()
    inc = inclusion_functor(H, X)
    col = collapse_functor(H)
    P, _, _ = cat_pushout(inc, col, bound)
    left = homology(nerve(P))
    NH = nerve(H)
    NS, _, _ = pushout(nerve_map(inc, NH), nerve_map(col, NH))
    right = homology(NS)
    witness = {"cat_pushout_size": list(P.size()), "sset_pushout_f_vector": list(NS.f_vector()),
               "cat_side_is_point": left.is_point(), "sset_side_is_S2": right == sphere_homology(2)}
    return report("hexagon pushout: Cat vs SSet", {}, left, right, False, witness)


# ---------------------------------------------------------------------------
# Subdivided simplices


def subdivided_boundary_inclusion(kind: str, k: int, n: int) -> SSetMap:
    """``sub^k(boundary Delta^n) -> sub^k(Delta^n)``."""
    return iterate_map(kind, k, boundary(n)[1])


def subdivision_pushout(kind: str, k: int, n: int, bound: int = DEFAULT_BOUND) -> dict:
    """Collapse ``cat sub^k(boundary)`` inside ``cat sub^k(Delta^n)`` and compare with ``S^n``.

    Left: homology of the nerve of the Cat pushout.  Right: homology of the
    pushout of simplicial sets ``sub^k(Delta^n) / sub^k(boundary)``.
    """
    f = subdivided_boundary_inclusion(kind, k, n)
    A, X = cat(f.source, bound), cat(f.target, bound)
    F = cat_map(f, A, X, bound)
    witness = {"cat_terminal": repr(has_terminal_object(X)), "subdivided_f_vector": list(f.target.f_vector())}
    try:
        P, _, _ = cat_pushout(F, collapse_functor(A), bound)
        witness["cat_pushout_size"] = list(P.size())
        left = homology(nerve(P))
    except (InfiniteNerve, ClosureBoundExceeded) as exc:
        witness["cat_nerve"] = f"{type(exc).__name__}: {exc}"
        left = None
    Q, _, _ = pushout(f, to_point(f.source))
    right = homology(Q)
    witness["sset_pushout_is_sphere"] = right == sphere_homology(n)
    witness["cat_pushout_nerve_is_point"] = left is not None and left.is_point()
    return report(f"{kind}^{k} pushout: Cat vs SSet", {"kind": kind, "k": k, "n": n}, left, right, False, witness)


def to_point(S: SSet) -> SSetMap:
    """The unique map ``S -> Delta^0``."""
    pt = point()
    v = pt.simplices(0)[0]
    return SSetMap(S, pt, {key: NSimplex(MonotoneMap((0,) * (S.dim(key) + 1), 0), v) for key in S.keys()},
                   check=False)

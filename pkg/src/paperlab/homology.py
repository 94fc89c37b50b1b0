"""Integral homology through Smith normal form.

Boundary matrices are kept sparse (``{row: {col: value}}``).  Elimination
first clears every unit pivot, which keeps entries small on the simplicial
complexes met here, then finishes the (usually empty) remainder densely.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, Hashable, List, Sequence, Tuple

Sparse = Dict[Hashable, Dict[Hashable, int]]


def _dense_diagonal(rows: List[List[int]]) -> List[int]:
    """Diagonalize a dense integer matrix; return the nonzero diagonal entries."""
    a = [r[:] for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < m and t < n:
        nz = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        a[t], a[pi] = a[pi], a[t]
        for r in a:
            r[t], r[pj] = r[pj], r[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        done = False
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    for r in a:
                        r[j] -= q * r[t]
                    if a[t][j]:
                        done = False
            if done:
                break
            # a remainder is smaller than the pivot: move it into pivot position
            best = min(
                [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
                + [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
            )
            _, bi, bj = best
            a[t], a[bi] = a[bi], a[t]
            for r in a:
                r[t], r[bj] = r[bj], r[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def invariant_factors_of_diagonal(d: Sequence[int]) -> List[int]:
    """Smith invariant factors (each dividing the next) of a diagonal matrix."""
    d = sorted(x for x in d if x)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                a, b = d[i], d[j]
                if b % a:
                    g = gcd(a, b)
                    d[i], d[j] = g, a * b // g
                    changed = True
        d.sort()
    return d


def smith_invariants(matrix: Sparse, ncols: int = None) -> List[int]:
    """Nonzero invariant factors of a sparse integer matrix."""
    rows = {r: {c: v for c, v in cols.items() if v} for r, cols in matrix.items()}
    rows = {r: c for r, c in rows.items() if c}
    colidx: Dict[Hashable, set] = {}
    for r, cols in rows.items():
        for c in cols:
            colidx.setdefault(c, set()).add(r)
    # shortest rows first, each pivoted on its unit entry with the sparsest
    # column; a row is queued again whenever elimination changes it
    order = {r: i for i, r in enumerate(rows)}
    heap = [(len(cols), order[r], r) for r, cols in rows.items()]
    heapq.heapify(heap)
    units = 0
    while heap:
        length, _, pr = heapq.heappop(heap)
        prow = rows.get(pr)
        if prow is None or len(prow) != length:
            continue
        pc, best = None, None
        for c, v in prow.items():
            if v in (1, -1) and (best is None or len(colidx[c]) < best):
                pc, best = c, len(colidx[c])
        if pc is None:
            continue
        del rows[pr]
        pv = prow[pc]
        for c in prow:
            colidx[c].discard(pr)
        for r in list(colidx[pc]):
            row = rows[r]
            q = row[pc] * pv  # pv is +-1 so this is row[pc] / pv
            for c, v in prow.items():
                nv = row.get(c, 0) - q * v
                if nv:
                    if c not in row:
                        colidx[c].add(r)
                    row[c] = nv
                elif c in row:
                    del row[c]
                    colidx[c].discard(r)
            if row:
                heapq.heappush(heap, (len(row), order[r], r))
            else:
                del rows[r]
        del colidx[pc]
        units += 1
    rest: List[int] = []
    if rows:
        cols = sorted({c for cs in rows.values() for c in cs}, key=repr)
        cpos = {c: i for i, c in enumerate(cols)}
        dense = []
        for cs in rows.values():
            line = [0] * len(cols)
            for c, v in cs.items():
                line[cpos[c]] = v
            dense.append(line)
        rest = _dense_diagonal(dense)
    return [1] * units + invariant_factors_of_diagonal(rest)


def matrix_rank_and_torsion(matrix: Sparse) -> Tuple[int, List[int]]:
    inv = smith_invariants(matrix)
    return len(inv), [d for d in inv if d > 1]


@dataclass(frozen=True)
class HomologyResult:
    """Betti numbers and torsion coefficients per degree (trailing zeros trimmed)."""

    betti: Tuple[int, ...]
    torsion: Tuple[Tuple[int, ...], ...]

    @classmethod
    def build(cls, betti, torsion):
        betti, torsion = list(betti), [tuple(sorted(t)) for t in torsion]
        while len(betti) > 1 and betti[-1] == 0 and not torsion[-1]:
            betti.pop()
            torsion.pop()
        return cls(tuple(betti), tuple(torsion))

    def rank(self, n: int) -> int:
        return self.betti[n] if n < len(self.betti) else 0

    def torsion_in(self, n: int) -> Tuple[int, ...]:
        return self.torsion[n] if n < len(self.torsion) else ()

    def is_point(self) -> bool:
        return self.betti == (1,) and self.torsion == ((),)

    def is_zero(self) -> bool:
        return all(b == 0 for b in self.betti) and all(not t for t in self.torsion)

    def truncated(self, top: int) -> "HomologyResult":
        """Only degrees ``0 .. top``."""
        return HomologyResult.build(self.betti[: top + 1] or (0,), self.torsion[: top + 1] or ((),))

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * b for n, b in enumerate(self.betti))

    @classmethod
    def from_table(cls, rows: List[dict]) -> "HomologyResult":
        """Inverse of :meth:`table`."""
        return cls.build([r["betti"] for r in rows], [r["torsion"] for r in rows])

    def table(self) -> List[dict]:
        return [{"degree": n, "betti": b, "torsion": list(t)}
                for n, (b, t) in enumerate(zip(self.betti, self.torsion))]

    def __str__(self):
        parts = []
        for n, (b, t) in enumerate(zip(self.betti, self.torsion)):
            terms = ([f"Z^{b}" if b > 1 else "Z"] if b else []) + [f"Z/{d}" for d in t]
            parts.append(f"H{n}=" + (" + ".join(terms) if terms else "0"))
        return ", ".join(parts)


def sphere_homology(n: int) -> HomologyResult:
    if n == 0:
        return HomologyResult.build([2], [()])
    return HomologyResult.build([1] + [0] * (n - 1) + [1], [()] * (n + 1))


POINT = HomologyResult.build([1], [()])


@dataclass
class ChainComplex:
    """Free chain complex: ``basis[n]`` and sparse ``boundary[n]`` from degree n to n-1.

    ``boundary[n]`` is stored by column: ``{basis element of degree n: {face: coefficient}}``.
    """

    basis: Dict[int, List[Hashable]]
    boundary: Dict[int, Sparse] = field(default_factory=dict)

    def __post_init__(self):
        self.check_square_zero()

    @property
    def top(self) -> int:
        return max((n for n, b in self.basis.items() if b), default=0)

    def check_square_zero(self):
        for n in list(self.boundary):
            lower = self.boundary.get(n - 1)
            if not lower:
                continue
            for x, col in self.boundary[n].items():
                acc: Dict[Hashable, int] = {}
                for y, c in col.items():
                    for z, e in lower.get(y, {}).items():
                        acc[z] = acc.get(z, 0) + c * e
                if any(acc.values()):
                    raise ValueError(f"boundary of boundary of {x!r} is not zero")

    def homology(self, upto: int = None) -> HomologyResult:
        """Homology in degrees ``0 .. upto`` (default: all)."""
        top = self.top if upto is None else upto
        ranks, torsion = {}, {}
        for n in range(1, top + 2):
            r, t = matrix_rank_and_torsion(self.boundary.get(n, {}))
            ranks[n], torsion[n] = r, t
        betti, tors = [], []
        for n in range(top + 1):
            dim = len(self.basis.get(n, ()))
            betti.append(dim - ranks.get(n, 0) - ranks.get(n + 1, 0))
            tors.append(tuple(torsion.get(n + 1, ())))
        return HomologyResult.build(betti, tors)


def chain_complex(S, top: int = None) -> ChainComplex:
    """Normalized chain complex of a simplicial set: degenerate faces vanish.

    With ``top`` only degrees up to ``top + 1`` are built, enough for
    homology in degrees ``0 .. top``.
    """
    dim = S.dimension if top is None else min(S.dimension, top + 1)
    basis = {n: S.simplices(n) for n in range(dim + 1)}
    boundary = {}
    for n in range(1, dim + 1):
        cols = {}
        for key in basis[n]:
            col: Dict[Hashable, int] = {}
            for i, f in enumerate(S.faces(key)):
                if not f.is_degenerate():
                    col[f.base] = col.get(f.base, 0) + (-1) ** i
            cols[key] = {k: v for k, v in col.items() if v}
        boundary[n] = cols
    return ChainComplex(basis, boundary)


def homology(S, top: int = None) -> HomologyResult:
    """Integral homology of a finite simplicial set (degrees ``<= top`` if given)."""
    if top is None:
        return chain_complex(S).homology()
    return chain_complex(S, top).homology(upto=top)


def is_homology_point(S) -> bool:
    return homology(S).is_point()


def mapping_cone(f) -> ChainComplex:
    """Mapping cone of the chain map induced by a simplicial map ``f: X -> Y``.

    ``f`` is a homology isomorphism exactly when the cone is acyclic.
    """
    X, Y = f.source, f.target
    cx, cy = chain_complex(X), chain_complex(Y)
    top = max(cx.top + 1, cy.top)
    basis, boundary = {}, {}
    for n in range(top + 1):
        basis[n] = [("x", k) for k in cx.basis.get(n - 1, [])] + [("y", k) for k in cy.basis.get(n, [])]
    for n in range(1, top + 1):
        cols = {}
        for k in cx.basis.get(n - 1, []):
            col = {("x", z): -c for z, c in cx.boundary.get(n - 1, {}).get(k, {}).items()}
            img = f.mapping[k]
            if not img.is_degenerate():
                col[("y", img.base)] = col.get(("y", img.base), 0) + 1
            cols[("x", k)] = {a: b for a, b in col.items() if b}
        for k in cy.basis.get(n, []):
            cols[("y", k)] = {("y", z): c for z, c in cy.boundary.get(n, {}).get(k, {}).items()}
        boundary[n] = cols
    return ChainComplex(basis, boundary)


def is_homology_equivalence(f) -> bool:
    """Whether a simplicial map induces an isomorphism on integral homology."""
    H = mapping_cone(f).homology()
    return H.is_zero()

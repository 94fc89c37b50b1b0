"""Coends of simplicial sets against truncated cosimplicial simplicial sets.

For a simplicial set ``S`` and a cosimplicial simplicial set ``D`` the coend
``S_n (x)_{n in Delta} D(n)`` has ``m``-simplices

    (coproduct over n of S_n x D(n)_m) / (theta^* x, d) ~ (x, D(theta) d).

Every class has a representative ``(x, d)`` with ``x`` nondegenerate, and the
relations between such representatives are generated by the elementary
cofaces: ``(x, D(delta^i) d) ~ (y, D(s) d)`` where ``d_i x = s^* y``.  The
classes are computed level by level with a union-find, which works for any
``D`` (no cofibrancy assumption).
"""
from __future__ import annotations

from typing import Callable, Dict, Hashable, Optional

from .delta import MonotoneMap, all_maps, coface, compose, identity
from .sset import NSimplex, SSet, SSetMap, SSetError, standard_simplex, standard_simplex_map


class TruncationTooSmall(ValueError):
    """The truncation of Delta is below what the construction needs."""


class CosimplicialSSet:
    """A functor ``Delta_{<=N} -> SSets`` given by level and map constructors.

    Parameters
    ----------
    level : callable
        ``n -> SSet`` for ``0 <= n <= trunc``.
    induced : callable
        ``theta -> SSetMap`` from ``level(theta.src)`` to ``level(theta.dst)``.
    trunc : int
        Highest level available.
    """

    def __init__(self, level: Callable[[int], SSet], induced: Callable[[MonotoneMap], SSetMap],
                 trunc: int, name: str = ""):
        self._level = level
        self._induced = induced
        self.trunc = trunc
        self.name = name
        self._levels: Dict[int, SSet] = {}
        self._maps: Dict[MonotoneMap, SSetMap] = {}

    def level(self, n: int) -> SSet:
        if n > self.trunc:
            raise TruncationTooSmall(f"level {n} requested from a {self.trunc}-truncated object")
        if n not in self._levels:
            self._levels[n] = self._level(n)
        return self._levels[n]

    def map(self, theta: MonotoneMap) -> SSetMap:
        if theta not in self._maps:
            f = self._induced(theta)
            if f.source is not self.level(theta.src) or f.target is not self.level(theta.dst):
                raise SSetError("induced map must use the cached levels")
            self._maps[theta] = f
        return self._maps[theta]

    def validate(self, upto: Optional[int] = None):
        """Identities and composites are preserved (exhaustive within the truncation)."""
        top = self.trunc if upto is None else min(upto, self.trunc)
        for n in range(top + 1):
            ident = self.map(identity(n))
            for k in self.level(n).keys():
                if ident.mapping[k] != self.level(n).nd(k):
                    raise SSetError(f"identity of level {n} moves {k!r}")
        for a in range(top + 1):
            for b in range(top + 1):
                for g in all_maps(a, b):
                    G = self.map(g)
                    for c in range(top + 1):
                        for f in all_maps(b, c):
                            F, FG = self.map(f), self.map(compose(f, g))
                            for k in self.level(a).keys():
                                x = self.level(a).nd(k)
                                if F(G(x)) != FG(x):
                                    raise SSetError(f"functoriality fails for {f} o {g} on {k!r}")


def standard_simplices(trunc: int) -> CosimplicialSSet:
    """``n -> Delta^n``; coending against it gives back the simplicial set."""
    D: CosimplicialSSet

    def induced(theta):
        f = standard_simplex_map(theta)
        return SSetMap(D.level(theta.src), D.level(theta.dst), f.mapping, check=False)

    D = CosimplicialSSet(standard_simplex, induced, trunc, name="Delta")
    return D


def constant(S: SSet, trunc: int) -> CosimplicialSSet:
    """The constant cosimplicial object on ``S``."""
    return CosimplicialSSet(lambda n: S, lambda theta: S.identity_map(), trunc, name="const")


class Coend:
    """Result of :func:`coend_sset`: the simplicial set plus the class lookup.

    Nondegenerate simplices are keyed ``(x, b)`` where ``x`` is a nondegenerate
    simplex of ``S`` and ``b`` a nondegenerate simplex of ``D(dim x)``; this is
    the first representative of the class in enumeration order (lowest
    dimensional ``x`` first).
    """

    def __init__(self, S: SSet, D: CosimplicialSSet):
        self.S = S
        self.D = D
        self.sset: SSet = None  # type: ignore[assignment]
        self._parent: Dict = {}
        self._members: Dict = {}
        self._nf: Dict = {}

    def _find(self, a):
        p = self._parent
        r = a
        while p[r] != r:
            r = p[r]
        while p[a] != r:
            p[a], a = r, p[a]
        return r

    def _union(self, a, b):
        ra, rb = self._find(a), self._find(b)
        if ra == rb:
            return
        # keep the earlier-enumerated representative as root
        if self._order[rb] < self._order[ra]:
            ra, rb = rb, ra
        self._parent[rb] = ra

    def element(self, x: Hashable, e: NSimplex) -> NSimplex:
        """Normal form of the class of ``(x, e)`` with ``x`` nondegenerate in ``S``."""
        if (x, e) not in self._parent:
            # above the enumerated levels every simplex is degenerate
            w = self.element(x, NSimplex(identity(e.degeneracy.dst), e.base))
            return NSimplex(compose(w.degeneracy, e.degeneracy), w.base)
        root = self._find((x, e))
        hit = self._nf.get(root)
        if hit is not None:
            return hit
        rx, re = root
        if not re.is_degenerate() and not self._degenerate_class[root]:
            out = NSimplex(re.degeneracy, (rx, re.base))
        else:
            dx, de = self._degenerate_class[root]
            w = self.element(dx, NSimplex(identity(de.degeneracy.dst), de.base))
            out = NSimplex(compose(w.degeneracy, de.degeneracy), w.base)
        self._nf[root] = out
        return out


def coend_sset(S: SSet, D: CosimplicialSSet, trunc: Optional[int] = None) -> Coend:
    """The coend ``S (x)_Delta D`` as a finite simplicial set.

    ``trunc`` defaults to the truncation of ``D`` and must be at least
    ``dim S``, since simplices of ``S`` above the truncation cannot be paired.
    """
    trunc = D.trunc if trunc is None else trunc
    if trunc > D.trunc:
        raise TruncationTooSmall(f"requested truncation {trunc} exceeds the cosimplicial object ({D.trunc})")
    if S.dimension > trunc:
        raise TruncationTooSmall(f"dim S = {S.dimension} exceeds the truncation {trunc}")
    C = Coend(S, D)
    xs = sorted(S.keys(), key=S.dim)
    top = max(D.level(S.dim(x)).dimension for x in xs)
    order: Dict = {}
    parent = C._parent
    for m in range(top + 1):
        for x in xs:
            for e in D.level(S.dim(x)).all_simplices(m):
                node = (x, e)
                order[node] = len(order)
                parent[node] = node
    C._order = order
    for x in xs:
        n = S.dim(x)
        if n == 0:
            continue
        low = D.level(n - 1)
        for i in range(n + 1):
            fi = S.face(x, i)
            push = D.map(coface(n, i))
            down = D.map(fi.degeneracy)
            for m in range(low.dimension + 1):
                for e in low.all_simplices(m):
                    C._union((x, push(e)), (fi.base, down(e)))
    # a class is degenerate iff one of its members has a degenerate D-part
    degenerate: Dict = {}
    for node in order:
        r = C._find(node)
        if r not in degenerate:
            degenerate[r] = None
        if degenerate[r] is None and node[1].is_degenerate():
            degenerate[r] = node
    C._degenerate_class = degenerate
    faces: Dict = {}
    for node in order:
        x, e = node
        if e.is_degenerate() or C._find(node) != node or degenerate[node] is not None:
            continue
        Dn = D.level(S.dim(x))
        m = e.dim
        faces[(x, e.base)] = [C.element(x, Dn.d(i, e)) for i in range(m + 1)] if m else []
    C.sset = SSet(faces, check=False)
    return C


def coend_map(f: SSetMap, A: Coend, B: Coend) -> SSetMap:
    """The map ``A -> B`` induced by ``f: A.S -> B.S`` (both coends over the same ``D``)."""
    if A.D is not B.D:
        raise SSetError("coends must share the cosimplicial object")
    D = A.D
    mapping = {}
    for key in A.sset.keys():
        x, b = key
        fx = f.mapping[x]
        n = A.S.dim(x)
        e = D.map(fx.degeneracy)(D.level(n).nd(b))
        mapping[key] = B.element(fx.base, e)
    return SSetMap(A.sset, B.sset, mapping, check=False)

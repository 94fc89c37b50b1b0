"""Barycentric, edgewise and Segal subdivision.

The edgewise (``esd``) and Segal (``ssd``) subdivisions reindex a simplicial
set along a functor ``Phi: Delta -> Delta`` with ``Phi[n] = [2n+1]``:

* ``esd``: ``Phi(theta) = theta <+> theta``
* ``ssd``: ``Phi(theta) = r(theta) <+> theta``

so ``sub(S)_n = S_{2n+1}`` with ``theta`` acting as ``Phi(theta)``.  An element
``(sigma, x)`` of ``S_{2n+1}`` (normal form in ``S``) is degenerate in
``sub(S)`` exactly when ``sigma`` factors through ``Phi(s^j)`` for some ``j``.

Barycentric subdivision goes through the generic coend against the face
poset nerves ``n -> N(F_n)``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Hashable, Tuple

from .category import Functor, face_poset
from .coend import Coend, CosimplicialSSet, coend_map, coend_sset
from .delta import (
    MonotoneMap,
    codegeneracy,
    coface,
    compose,
    ordinal_sum,
    reverse,
    surjections,
)
from .nerve import nerve, nerve_map
from .sset import (
    NSimplex,
    SSet,
    SSetMap,
    find_isomorphism,
    pair_into_product,
    product_with_projections,
)

KINDS = ("sd", "esd", "ssd")


def esd_reindex(theta: MonotoneMap) -> MonotoneMap:
    return ordinal_sum(theta, theta)


def ssd_reindex(theta: MonotoneMap) -> MonotoneMap:
    return ordinal_sum(reverse(theta), theta)


REINDEX: Dict[str, Callable[[MonotoneMap], MonotoneMap]] = {"esd": esd_reindex, "ssd": ssd_reindex}


def quoted_face(kind: str, n: int, i: int) -> MonotoneMap:
    """The coface map behind the closed formula for ``d_i`` on ``sub(S)_n``.

    ``esd``: ``d_i d_{i+n+1}``; ``ssd``: ``d_{n-i} d_{n+1+i}``, both read as
    operators on ``S_{2n+1}`` (the right-hand face acts first).
    """
    if kind == "esd":
        first, second = i + n + 1, i
    else:
        first, second = n + 1 + i, n - i
    # d_second d_first = (delta^first o delta^second)^*
    return compose(coface(2 * n + 1, first), coface(2 * n, second))


def quoted_degeneracy(kind: str, n: int, i: int) -> MonotoneMap:
    """The codegeneracy map behind the closed formula for ``s_i`` on ``sub(S)_n``.

    ``esd``: ``s_{i+n+1} s_i``; ``ssd``: ``s_{n+1+i} s_{n-i}``.
    """
    if kind == "esd":
        first, second = i + n + 1, i
    else:
        first, second = n + 1 + i, n - i
    # s_second s_first = (sigma^first o sigma^second)^*
    return compose(codegeneracy(2 * n + 1, first), codegeneracy(2 * n + 2, second))


def check_operator_formulas(kind: str, upto: int = 6) -> bool:
    """The reindexing functor agrees with the closed face/degeneracy formulas."""
    phi = REINDEX[kind]
    for n in range(upto + 1):
        for i in range(n + 1):
            if n >= 1 and phi(coface(n, i)) != quoted_face(kind, n, i):
                return False
            if phi(codegeneracy(n, i)) != quoted_degeneracy(kind, n, i):
                return False
    return True


@lru_cache(maxsize=None)
def _fibers(kind: str, n: int, j: int) -> Tuple[Tuple[int, int], ...]:
    """Pairs of points of ``[2n+1]`` identified by ``Phi(s^j)``."""
    s = REINDEX[kind](codegeneracy(n - 1, j))
    v = s.values
    return tuple((a, a + 1) for a in range(len(v) - 1) if v[a] == v[a + 1])


class Subdivision:
    """The reindexed simplicial set ``sub(S)`` with its normalizer.

    Nondegenerate ``n``-simplices are keyed ``(x, sigma.values)`` for the
    element ``(sigma, x)`` of ``S_{2n+1}``.
    """

    def __init__(self, kind: str, S: SSet):
        if kind not in REINDEX:
            raise ValueError(f"unknown reindexing subdivision {kind!r}")
        self.kind = kind
        self.S = S
        self.phi = REINDEX[kind]
        faces: Dict = {}
        # Phi-nondegenerate simplices live in dimensions <= dim S
        for n in range(S.dimension + 1):
            lev = 2 * n + 1
            for k in range(min(lev, S.dimension) + 1):
                for sigma in surjections(lev, k):
                    if self._degeneracy_indices(n, sigma):
                        continue
                    for x in S.simplices(k):
                        key = (x, sigma.values)
                        if n == 0:
                            faces[key] = []
                            continue
                        z = NSimplex(sigma, x)
                        faces[key] = [self.normalize(n - 1, S.apply(self.phi(coface(n, i)), z))
                                      for i in range(n + 1)]
        self.sset = SSet(faces, check=False)

    def _degeneracy_indices(self, n: int, sigma: MonotoneMap):
        v = sigma.values
        return [j for j in range(n) if all(v[a] == v[b] for a, b in _fibers(self.kind, n, j))]

    def normalize(self, n: int, z: NSimplex) -> NSimplex:
        """Normal form in ``sub(S)`` of the element ``z`` of ``S_{2n+1}``."""
        js = set(self._degeneracy_indices(n, z.degeneracy))
        vals, level = [0], 0
        for i in range(1, n + 1):
            if i - 1 not in js:
                level += 1
            vals.append(level)
        s = MonotoneMap(tuple(vals), level)
        big = self.phi(s)
        tau = [None] * (2 * level + 2)
        for a, b in enumerate(big.values):
            tau[b] = z.degeneracy.values[a]
        return NSimplex(s, (z.base, tuple(tau)))

    def element(self, key) -> NSimplex:
        """The element of ``S_{2n+1}`` behind a nondegenerate key."""
        x, vals = key
        return NSimplex(MonotoneMap(vals, self.S.dim(x)), x)


def esd(S: SSet) -> SSet:
    return Subdivision("esd", S).sset


def ssd(S: SSet) -> SSet:
    return Subdivision("ssd", S).sset


def reindexed_map(f: SSetMap, A: Subdivision, B: Subdivision) -> SSetMap:
    """``sub(f): sub(X) -> sub(Y)`` for ``f: X -> Y``."""
    mapping = {}
    for key in A.sset.keys():
        n = A.sset.dim(key)
        mapping[key] = B.normalize(n, f(A.element(key)))
    return SSetMap(A.sset, B.sset, mapping, check=False)


# ---------------------------------------------------------------------------
# Barycentric subdivision


def _face_image_functor(theta: MonotoneMap, src, dst) -> Functor:
    obj = {a: tuple(sorted({theta.values[i] for i in a})) for a in src.objects}
    mor = {m: (obj[a], obj[b]) for m, (a, b) in src.morphisms.items()}
    return Functor(src, dst, obj, mor)


def face_poset_nerves(trunc: int) -> CosimplicialSSet:
    """``n -> N(F_n)``; a monotone map acts by taking images of faces."""
    posets: Dict[int, object] = {}

    def poset_of(n):
        if n not in posets:
            posets[n] = face_poset(n)
        return posets[n]

    D: CosimplicialSSet

    def induced(theta):
        F = _face_image_functor(theta, poset_of(theta.src), poset_of(theta.dst))
        return nerve_map(F, D.level(theta.src), D.level(theta.dst))

    D = CosimplicialSSet(lambda n: nerve(poset_of(n)), induced, trunc, name="N(F)")
    return D


_SD_CACHE: Dict[int, CosimplicialSSet] = {}


def _sd_functor(dim: int) -> CosimplicialSSet:
    trunc = max(dim, 4)
    for t, D in _SD_CACHE.items():
        if t >= trunc:
            return D
    D = face_poset_nerves(trunc)
    _SD_CACHE.clear()
    _SD_CACHE[trunc] = D
    return D


def sd_coend(S: SSet) -> Coend:
    """Barycentric subdivision with its coend bookkeeping."""
    return coend_sset(S, _sd_functor(S.dimension), trunc=S.dimension)


def sd(S: SSet) -> SSet:
    """Barycentric subdivision ``S_n (x)_{n in Delta} N(F_n)``.

    Nondegenerate simplices are keyed ``(x, chain)``: a nondegenerate simplex
    ``x`` of ``S`` and a chain of faces of ``Delta^{dim x}`` ending in the
    top face.
    """
    return sd_coend(S).sset


# ---------------------------------------------------------------------------
# Generic front end


class Subdivided:
    """``sub(S)`` for any of the three kinds, with functoriality."""

    def __init__(self, kind: str, S: SSet):
        if kind not in KINDS:
            raise ValueError(f"unknown subdivision {kind!r}; expected one of {KINDS}")
        self.kind = kind
        self.S = S
        if kind == "sd":
            self._impl = sd_coend(S)
        else:
            self._impl = Subdivision(kind, S)
        self.sset: SSet = self._impl.sset

    def map_to(self, f: SSetMap, target: "Subdivided") -> SSetMap:
        if self.kind != target.kind:
            raise ValueError("subdivisions of different kinds")
        if self.kind == "sd":
            return coend_map(f, self._impl, target._impl)
        return reindexed_map(f, self._impl, target._impl)


def subdivide(kind: str, S: SSet) -> SSet:
    return Subdivided(kind, S).sset


def iterate(kind: str, k: int, S: SSet) -> SSet:
    """``sub^k(S)``; ``k = 0`` returns ``S`` itself."""
    if k < 0:
        raise ValueError("k must be >= 0")
    for _ in range(k):
        S = subdivide(kind, S)
    return S


def iterate_map(kind: str, k: int, f: SSetMap, A: SSet = None, B: SSet = None):
    """``sub^k(f)`` together with the subdivided source and target."""
    for _ in range(k):
        sa, sb = Subdivided(kind, f.source), Subdivided(kind, f.target)
        f = sa.map_to(f, sb)
    return f


# ---------------------------------------------------------------------------
# Barycentric coordinates


def _midpoint(p, q):
    return tuple((a + b) / 2 for a, b in zip(p, q))


def vertex_coordinates(kind: str, k: int, n: int) -> Tuple[SSet, Dict[Hashable, Tuple[Fraction, ...]]]:
    """Exact barycentric coordinates in ``Delta^n`` of the vertices of ``sub^k(Delta^n)``.

    A vertex of ``sub(X)`` is a 1-simplex of ``X`` (possibly degenerate) and
    is placed at the midpoint of its two endpoints.  Returns the subdivided
    simplicial set and the coordinate map.
    """
    from .sset import standard_simplex

    if kind not in REINDEX:
        raise ValueError("coordinates are defined for esd and ssd")
    X = standard_simplex(n)
    coords = {}
    for v in X.simplices(0):
        pt = [Fraction(0)] * (n + 1)
        pt[v[0]] = Fraction(1)
        coords[v] = tuple(pt)
    for _ in range(k):
        sub = Subdivision(kind, X)
        new = {}
        for key in sub.sset.simplices(0):
            a, b = X.vertices_of(sub.element(key))
            new[key] = _midpoint(coords[a], coords[b])
        X, coords = sub.sset, new
    return X, coords


def support(point) -> int:
    return sum(1 for c in point if c != 0)


def barycenter(n: int) -> Tuple[Fraction, ...]:
    return tuple(Fraction(1, n + 1) for _ in range(n + 1))


# ---------------------------------------------------------------------------
# Products


def product_comparison(kind: str, S: SSet, T: SSet) -> SSetMap:
    """The canonical map ``sub(S x T) -> sub(S) x sub(T)``."""
    from .sset import product

    P, p1, p2 = product_with_projections(S, T)
    sP, sS, sT = Subdivided(kind, P), Subdivided(kind, S), Subdivided(kind, T)
    q1, q2 = sP.map_to(p1, sS), sP.map_to(p2, sT)
    Q = product(sS.sset, sT.sset)
    mapping = {k: pair_into_product(Q, sS.sset, sT.sset, q1.mapping[k], q2.mapping[k]) for k in sP.sset.keys()}
    return SSetMap(sP.sset, Q, mapping, check=False)


def subdivision_product_check(kind: str, S: SSet, T: SSet) -> Tuple[bool, dict]:
    """Whether ``sub(S x T) -> sub(S) x sub(T)`` is an isomorphism.

    The witness records both f-vectors; when the comparison map is not an
    isomorphism but the f-vectors agree, an abstract isomorphism is also
    searched for and reported.
    """
    f = product_comparison(kind, S, T)
    f.validate()
    left, right = f.source.f_vector(), f.target.f_vector()
    witness = {"sub(SxT)": list(left), "sub(S)xsub(T)": list(right)}
    ok = f.is_isomorphism()
    if not ok:
        witness["vertices"] = [len(f.source.simplices(0)), len(f.target.simplices(0))]
        if left == right:
            witness["abstractly_isomorphic"] = find_isomorphism(f.source, f.target) is not None
    return ok, witness


# ---------------------------------------------------------------------------
# Segal subdivision of a nerve


def ssd_nerve_comparison(C) -> SSetMap:
    """The canonical map ``ssd(N C) -> N(C')`` with ``C'`` the morphism category.

    An ``n``-simplex of ``ssd(N C)`` is a chain ``c_0 -> ... -> c_{2n+1}``; it
    goes to the chain of objects ``c_{n-i} -> c_{n+1+i}`` of ``C'`` joined by
    the squares built from the outer arrows.
    """
    from .category import morphism_category
    from .nerve import chain_simplex

    N = nerve(C)
    sub = Subdivision("ssd", N)
    M = morphism_category(C)
    NM = nerve(M)
    mapping = {}
    for key in sub.sset.keys():
        n = sub.sset.dim(key)
        z = sub.element(key)
        arrows = _chain_arrows(C, N, z)
        objs = [_span(C, arrows, n - i, n + 1 + i) for i in range(n + 1)]
        mors = []
        for i in range(n):
            u = arrows[n - i - 1]
            v = arrows[n + 1 + i]
            mors.append((objs[i], u, v))
        mapping[key] = chain_simplex(M, objs[0], mors)
    return SSetMap(sub.sset, NM, mapping, check=False)


def _chain_arrows(C, N: SSet, z: NSimplex):
    """The ``2n+1`` consecutive arrows of an element of ``N(C)_{2n+1}``."""
    x = z.base
    c0, gens = x[0], x[1:]
    objs = [c0]
    for g in gens:
        objs.append(C.tgt(g))
    out = []
    v = z.degeneracy.values
    for a in range(len(v) - 1):
        lo, hi = v[a], v[a + 1]
        if lo == hi:
            out.append(C.ident(objs[lo]))
        else:
            out.append(C.compose_path(list(gens[lo:hi])))
    if not out:
        return out
    return out


def _span(C, arrows, a: int, b: int):
    """Composite of ``arrows[a:b]`` (the arrow from ``c_a`` to ``c_b``)."""
    return C.compose_path(list(arrows[a:b]))

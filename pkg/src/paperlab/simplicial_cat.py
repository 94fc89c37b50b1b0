"""Simplicial and cosimplicial categories, and the levelwise nerve.

Both are given lazily by a level constructor and a constructor for the
functor induced by a monotone map; results are cached so that functors
always connect the cached level objects.
"""
from __future__ import annotations

from typing import Callable, Dict, List, Optional, Tuple

from .category import FinCat, Functor, cat_product, discrete, identity_functor, ordinal, terminal
from .delta import MonotoneMap, all_maps, codegeneracy, coface, compose, identity
from .nerve import cat, cat_map
from .presentation import DEFAULT_BOUND
from .sset import BiSimplex, BiSSet, SSet, diag, standard_simplex, standard_simplex_map


class FunctorialityError(ValueError):
    pass


class SimplicialCat:
    """A simplicial category ``C_*: Delta^op -> Cat``.

    Parameters
    ----------
    level : callable
        ``n -> C_n``.
    induced : callable
        ``theta: [m] -> [n]`` to the functor ``theta^*: C_n -> C_m``.
    dim : int
        Skeletal dimension: every simplex above it is degenerate, so each
        simplicial set ``p -> N_q(C_p)`` is ``dim``-skeletal.
    """

    def __init__(self, level: Callable[[int], FinCat], induced: Callable[[MonotoneMap], Functor],
                 dim: int, name: str = ""):
        self._level = level
        self._induced = induced
        self.dim = dim
        self.name = name
        self._levels: Dict[int, FinCat] = {}
        self._maps: Dict[MonotoneMap, Functor] = {}

    def __repr__(self):
        return f"SimplicialCat({self.name or '?'}, dim={self.dim})"

    def level(self, n: int) -> FinCat:
        if n not in self._levels:
            self._levels[n] = self._level(n)
        return self._levels[n]

    def map(self, theta: MonotoneMap) -> Functor:
        """``theta^*: C_{theta.dst} -> C_{theta.src}``."""
        if theta not in self._maps:
            self._maps[theta] = self._induced(theta)
        return self._maps[theta]

    def face(self, n: int, i: int) -> Functor:
        return self.map(coface(n, i))

    def degeneracy(self, n: int, j: int) -> Functor:
        """``s_j: C_n -> C_{n+1}``."""
        return self.map(codegeneracy(n, j))

    def validate(self, upto: Optional[int] = None):
        top = self.dim + 1 if upto is None else upto
        _check_functoriality(self, top, contravariant=True)


class CosimplicialCat:
    """A truncated cosimplicial category ``D: Delta_{<=N} -> Cat``."""

    def __init__(self, level: Callable[[int], FinCat], induced: Callable[[MonotoneMap], Functor],
                 trunc: int, name: str = ""):
        self._level = level
        self._induced = induced
        self.trunc = trunc
        self.name = name
        self._levels: Dict[int, FinCat] = {}
        self._maps: Dict[MonotoneMap, Functor] = {}

    def __repr__(self):
        return f"CosimplicialCat({self.name or '?'}, trunc={self.trunc})"

    def level(self, n: int) -> FinCat:
        from .coend import TruncationTooSmall

        if n > self.trunc:
            raise TruncationTooSmall(f"level {n} of a {self.trunc}-truncated cosimplicial category")
        if n not in self._levels:
            self._levels[n] = self._level(n)
        return self._levels[n]

    def map(self, theta: MonotoneMap) -> Functor:
        """``D(theta): D(theta.src) -> D(theta.dst)``."""
        if theta not in self._maps:
            self._maps[theta] = self._induced(theta)
        return self._maps[theta]

    def validate(self, upto: Optional[int] = None):
        top = self.trunc if upto is None else min(upto, self.trunc)
        _check_functoriality(self, top, contravariant=False)


def _check_functoriality(X, top: int, contravariant: bool):
    for n in range(top + 1):
        if not X.map(identity(n)).equals(identity_functor(X.level(n))):
            raise FunctorialityError(f"identity of level {n} is not sent to the identity")
    for a in range(top + 1):
        for b in range(top + 1):
            for g in all_maps(a, b):
                for c in range(top + 1):
                    for f in all_maps(b, c):
                        fg = compose(f, g)
                        if contravariant:
                            lhs = X.map(g).compose(X.map(f))
                        else:
                            lhs = X.map(f).compose(X.map(g))
                        if not lhs.equals(X.map(fg)):
                            raise FunctorialityError(f"functoriality fails for {f} o {g}")


# ---------------------------------------------------------------------------
# Simplicial categories


def discrete_scat(S: SSet, name: str = "") -> SimplicialCat:
    """``S`` regarded as a levelwise discrete simplicial category.

    Objects of ``C_n`` are all ``n``-simplices of ``S`` in normal form.
    """
    C: SimplicialCat

    def level(n):
        return discrete(list(S.all_simplices(n)))

    def induced(theta):
        src, tgt = C.level(theta.dst), C.level(theta.src)
        obj = {x: S.apply(theta, x) for x in src.objects}
        return Functor(src, tgt, obj, {src.ident(x): tgt.ident(y) for x, y in obj.items()})

    C = SimplicialCat(level, induced, S.dimension, name=name or f"disc{S.f_vector()}")
    return C


def constant_scat(K: FinCat, name: str = "") -> SimplicialCat:
    C = SimplicialCat(lambda n: K, lambda theta: identity_functor(K), 0, name=name or f"const({K.name or K.size()})")
    return C


def product_scat(A: SimplicialCat, B: SimplicialCat) -> SimplicialCat:
    """Levelwise product; the skeletal dimensions add."""
    C: SimplicialCat

    def induced(theta):
        fa, fb = A.map(theta), B.map(theta)
        src, tgt = C.level(theta.dst), C.level(theta.src)
        obj = {(a, b): (fa.ob(a), fb.ob(b)) for a, b in src.objects}
        mor = {(f, g): (fa(f), fb(g)) for f, g in src.morphisms}
        return Functor(src, tgt, obj, mor)

    C = SimplicialCat(lambda n: cat_product(A.level(n), B.level(n)), induced, A.dim + B.dim,
                      name=f"{A.name}x{B.name}")
    return C


def _apply_chain(F: Functor, chain) -> Tuple:
    """Image of a chain ``(c0, f1, ..., fq)`` under a functor (identities kept)."""
    return (F.ob(chain[0]),) + tuple(F(m) for m in chain[1:])


class LevelwiseNerve:
    """The bisimplicial set ``(p, q) -> N_q(C_p)`` in bi-normal form.

    Bi-nondegenerate bisimplices are keyed ``(p, chain)`` with ``chain`` a
    chain of ``q`` non-identity morphisms of ``C_p`` that is not the image of
    a degeneracy functor.
    """

    def __init__(self, C: SimplicialCat, top: Optional[int] = None):
        self.C = C
        top = C.dim if top is None else top
        bideg, hf, vf = {}, {}, {}
        for p in range(top + 1):
            Cp = C.level(p)
            for chain in _chains(Cp):
                if self._h_indices(p, chain):
                    continue
                key = (p, chain)
                q = len(chain) - 1
                bideg[key] = (p, q)
                hf[key] = [self.normalize(p - 1, _apply_chain(C.face(p, i), chain)) for i in range(p + 1)] if p else []
                vf[key] = [self.normalize(p, _chain_face(Cp, chain, i)) for i in range(q + 1)] if q else []
        self.bisset = BiSSet(bideg, hf, vf, check=False)

    def _h_indices(self, p: int, chain) -> List[int]:
        out = []
        for j in range(p):
            back = _apply_chain(self.C.degeneracy(p - 1, j), _apply_chain(self.C.face(p, j), chain))
            if back == chain:
                out.append(j)
        return out

    def normalize(self, p: int, chain) -> BiSimplex:
        """Bi-normal form of a chain of ``C_p`` (identities allowed)."""
        js = set(self._h_indices(p, chain))
        vals, lev, first = [0], 0, [0]
        for i in range(1, p + 1):
            if i - 1 not in js:
                lev += 1
                first.append(i)
            vals.append(lev)
        h = MonotoneMap(tuple(vals), lev)
        if lev < p:
            chain = _apply_chain(self.C.map(MonotoneMap(tuple(first), p)), chain)
        Cl = self.C.level(lev)
        vv, q, kept = [0], 0, []
        for m in chain[1:]:
            if not Cl.is_identity(m):
                q += 1
                kept.append(m)
            vv.append(q)
        return BiSimplex(h, MonotoneMap(tuple(vv), q), (lev, (chain[0],) + tuple(kept)))


def _chains(C: FinCat):
    from .nerve import nerve

    return list(nerve(C).keys())


def _chain_face(C: FinCat, chain, i: int):
    c0, mors = chain[0], chain[1:]
    n = len(mors)
    if i == 0:
        return (C.tgt(mors[0]),) + mors[1:]
    if i == n:
        return (c0,) + mors[:-1]
    return (c0,) + mors[: i - 1] + (C.comp(mors[i], mors[i - 1]),) + mors[i + 1:]


def diag_nerve(C: SimplicialCat) -> SSet:
    """``diag N^{Delta^op} C_*`` as a finite simplicial set."""
    return diag(LevelwiseNerve(C).bisset)


# ---------------------------------------------------------------------------
# Cosimplicial categories: the realization functors


REALIZATIONS = ("D0", "D1", "D2", "D3", "D4")


def _ordinal_functor(theta: MonotoneMap, src: FinCat, tgt: FinCat) -> Functor:
    v = theta.values
    return Functor(src, tgt, {i: v[i] for i in src.objects},
                   {(i, j): (v[i], v[j]) for (i, j) in src.morphisms})


def _subdivided_simplex_tower(kind: str, k: int):
    from .subdivide import Subdivided

    towers: Dict[int, list] = {}

    def tower(n):
        if n not in towers:
            steps, X = [], standard_simplex(n)
            for _ in range(k):
                s = Subdivided(kind, X)
                steps.append(s)
                X = s.sset
            towers[n] = (steps, X)
        return towers[n]

    def induced(theta):
        f = standard_simplex_map(theta)
        s_src, _ = tower(theta.src)
        s_tgt, _ = tower(theta.dst)
        for a, b in zip(s_src, s_tgt):
            f = a.map_to(f, b)
        return f

    return tower, induced


def realization_functor(tag: str, trunc: int, k: int = 1, bound: int = DEFAULT_BOUND) -> CosimplicialCat:
    """The cosimplicial categories ``D0 .. D4``.

    * ``D0``: constant on the terminal category.
    * ``D1``: ``n -> [n]``.
    * ``D2``: ``n -> cat(sd^2 Delta^n)``.
    * ``D3``: ``n -> cat(ssd^k Delta^n)``.
    * ``D4``: ``n -> cat(esd^k Delta^n)``.
    """
    if tag == "D0":
        T = terminal()
        return CosimplicialCat(lambda n: T, lambda theta: identity_functor(T), trunc, name="D0")
    if tag == "D1":
        D: CosimplicialCat
        D = CosimplicialCat(ordinal, lambda th: _ordinal_functor(th, D.level(th.src), D.level(th.dst)),
                            trunc, name="D1")
        return D
    kinds = {"D2": ("sd", 2), "D3": ("ssd", k), "D4": ("esd", k)}
    if tag not in kinds:
        raise ValueError(f"unknown realization {tag!r}; expected one of {REALIZATIONS}")
    kind, depth = kinds[tag]
    tower, induced_map = _subdivided_simplex_tower(kind, depth)
    D2: CosimplicialCat

    def level(n):
        return cat(tower(n)[1], bound)

    def induced(theta):
        return cat_map(induced_map(theta), D2.level(theta.src), D2.level(theta.dst), bound)

    name = tag if tag == "D2" else f"{tag}^({k})"
    D2 = CosimplicialCat(level, induced, trunc, name=name)
    return D2

"""Finite simplicial sets in Eilenberg-Zilber normal form.

A simplicial set is stored through its nondegenerate simplices.  Every
simplex, degenerate or not, is a :class:`NSimplex` ``(s, x)`` meaning
``s^*(x)`` for a monotone surjection ``s`` and a nondegenerate ``x``.  The
faces ``d_i x`` of each nondegenerate simplex are given in that normal form,
and every other simplicial operator is derived from them.

Simplex identifiers ("keys") are arbitrary hashables; constructions in this
package use nested tuples so that keys stay readable and deterministic.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

from .delta import (
    MonotoneMap,
    coface,
    compose,
    degeneracy_indices,
    ez_factorize,
    identity,
    injections,
    surjections,
)

Key = Hashable


class SSetError(ValueError):
    pass


class EmptyBoundary(SSetError):
    """The boundary of the 0-simplex is empty and cannot be represented."""


class NotASubcomplex(SSetError):
    pass


class UnsupportedPushout(SSetError):
    pass


class NotASimplicialMap(SSetError):
    pass


@dataclass(frozen=True)
class NSimplex:
    """A simplex in normal form: ``degeneracy^*(base)`` with ``base`` nondegenerate."""

    degeneracy: MonotoneMap
    base: Key

    @property
    def dim(self) -> int:
        return self.degeneracy.src

    def is_degenerate(self) -> bool:
        return self.degeneracy.src != self.degeneracy.dst

    def __repr__(self):
        if not self.is_degenerate():
            return f"<{self.base!r}>"
        return f"<{self.degeneracy.values}*{self.base!r}>"


def nd(base: Key, dim: int) -> NSimplex:
    """The nondegenerate simplex ``base`` of dimension ``dim`` in normal form."""
    return NSimplex(identity(dim), base)


def _pair_normalize(a: MonotoneMap, b: MonotoneMap):
    """Split the joint degeneracy off a pair of surjections ``[m] -> [p], [m] -> [q]``.

    Returns ``(pi, a', b')`` with ``a = a' o pi``, ``b = b' o pi`` and
    ``(a', b')`` jointly injective.
    """
    pairs = list(zip(a.values, b.values))
    pi, distinct = [], []
    for pr in pairs:
        if not distinct or distinct[-1] != pr:
            distinct.append(pr)
        pi.append(len(distinct) - 1)
    j = len(distinct) - 1
    return (
        MonotoneMap(tuple(pi), j),
        MonotoneMap(tuple(p for p, _ in distinct), a.dst),
        MonotoneMap(tuple(q for _, q in distinct), b.dst),
    )


def _joint_surjections(p: int, q: int) -> Iterator[Tuple[MonotoneMap, MonotoneMap]]:
    """Pairs of surjections out of a common ``[m]`` with no common degeneracy."""
    for m in range(max(p, q), p + q + 1):
        for s in surjections(m, p):
            ds = set(degeneracy_indices(s))
            for t in surjections(m, q):
                if ds.isdisjoint(degeneracy_indices(t)):
                    yield s, t


class SSet:
    """A finite simplicial set.

    Parameters
    ----------
    faces : mapping
        ``key -> [d_0 x, ..., d_n x]`` for every nondegenerate simplex, each
        face an :class:`NSimplex`.  Vertices map to an empty sequence.
    check : bool
        Verify the normalized simplicial identities.
    """

    def __init__(self, faces: Dict[Key, Sequence[NSimplex]], check: bool = True):
        self._faces: Dict[Key, Tuple[NSimplex, ...]] = {k: tuple(v) for k, v in faces.items()}
        self._dim = {k: max(0, len(v) - 1) for k, v in self._faces.items()}
        self._by_dim: Dict[int, List[Key]] = defaultdict(list)
        for k, d in self._dim.items():
            self._by_dim[d].append(k)
        if not self._by_dim.get(0):
            raise SSetError("a simplicial set needs at least one vertex")
        self._restrict_cache: Dict[Tuple[MonotoneMap, Key], NSimplex] = {}
        if check:
            self.validate()

    # -- basic access -------------------------------------------------
    @property
    def dimension(self) -> int:
        return max(self._by_dim)

    def keys(self) -> Iterable[Key]:
        return self._faces.keys()

    def __contains__(self, key) -> bool:
        return key in self._faces

    def __len__(self) -> int:
        return len(self._faces)

    def dim(self, key: Key) -> int:
        return self._dim[key]

    def simplices(self, n: int) -> List[Key]:
        """Nondegenerate ``n``-simplices."""
        return list(self._by_dim.get(n, ()))

    def faces(self, key: Key) -> Tuple[NSimplex, ...]:
        return self._faces[key]

    def face(self, key: Key, i: int) -> NSimplex:
        return self._faces[key][i]

    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(self._by_dim.get(n, ())) for n in range(self.dimension + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** n * c for n, c in enumerate(self.f_vector()))

    def __repr__(self):
        return f"SSet(f_vector={self.f_vector()})"

    def all_simplices(self, m: int) -> Iterator[NSimplex]:
        """Every ``m``-simplex, degenerate ones included."""
        for k in range(min(m, self.dimension) + 1):
            for s in surjections(m, k):
                for key in self._by_dim.get(k, ()):
                    yield NSimplex(s, key)

    # -- simplicial operators -----------------------------------------
    def nd(self, key: Key) -> NSimplex:
        return nd(key, self._dim[key])

    def apply(self, theta: MonotoneMap, x: NSimplex) -> NSimplex:
        """The simplicial operator ``theta^*`` applied to ``x``, in normal form."""
        if theta.dst != x.dim:
            raise SSetError(f"operator into [{theta.dst}] applied to a {x.dim}-simplex")
        ez = ez_factorize(compose(x.degeneracy, theta))
        y = self._restrict(ez.injection, x.base)
        return NSimplex(compose(y.degeneracy, ez.surjection), y.base)

    def _restrict(self, inj: MonotoneMap, key: Key) -> NSimplex:
        if inj.src == inj.dst:
            return NSimplex(inj, key)
        ck = (inj, key)
        hit = self._restrict_cache.get(ck)
        if hit is not None:
            return hit
        hit_set = set(inj.values)
        i = next(t for t in range(inj.dst + 1) if t not in hit_set)
        rest = MonotoneMap(tuple(v if v < i else v - 1 for v in inj.values), inj.dst - 1)
        out = self.apply(rest, self._faces[key][i])
        self._restrict_cache[ck] = out
        return out

    def d(self, i: int, x: NSimplex) -> NSimplex:
        return self.apply(coface(x.dim, i), x)

    def vertices_of(self, x: NSimplex) -> Tuple[Key, ...]:
        """Keys of the vertices ``0, ..., dim`` of ``x``."""
        out = []
        for v in range(x.dim + 1):
            out.append(self.apply(MonotoneMap((v,), x.dim), x).base)
        return tuple(out)

    def validate(self):
        for key, fs in self._faces.items():
            n = self._dim[key]
            if n == 0:
                continue
            for f in fs:
                if f.base not in self._faces:
                    raise SSetError(f"face {f} of {key!r} is not a simplex")
                if f.dim != n - 1 or not f.degeneracy.is_surjective():
                    raise SSetError(f"malformed face {f} of {key!r}")
                if f.degeneracy.dst != self._dim[f.base]:
                    raise SSetError(f"face {f} of {key!r} has wrong base dimension")
            for j in range(n + 1 if n > 1 else 0):
                for i in range(j):
                    a = self.apply(coface(n - 1, i), fs[j])
                    b = self.apply(coface(n - 1, j - 1), fs[i])
                    if a != b:
                        raise SSetError(
                            f"simplicial identity d{i}d{j} = d{j - 1}d{i} fails on {key!r}: {a} != {b}"
                        )

    # -- sub-objects ---------------------------------------------------
    def closure(self, keys: Iterable[Key]) -> set:
        out, stack = set(), list(keys)
        while stack:
            k = stack.pop()
            if k in out:
                continue
            out.add(k)
            stack.extend(f.base for f in self._faces[k])
        return out

    def subcomplex(self, keys: Iterable[Key]) -> Tuple["SSet", "SSetMap"]:
        kset = set(keys)
        keys = [k for k in self._faces if k in kset]
        for k in keys:
            for f in self._faces[k]:
                if f.base not in kset:
                    raise NotASubcomplex(f"{k!r} has face {f} outside the subset")
        sub = SSet({k: self._faces[k] for k in keys}, check=False)
        return sub, SSetMap(sub, self, {k: sub.nd(k) for k in keys}, check=False)

    def skeleton(self, n: int) -> "SSet":
        return self.subcomplex(k for k, d in self._dim.items() if d <= n)[0]

    def identity_map(self) -> "SSetMap":
        return SSetMap(self, self, {k: self.nd(k) for k in self._faces}, check=False)


class SSetMap:
    """A simplicial map, given on nondegenerate simplices of the source."""

    def __init__(self, source: SSet, target: SSet, mapping: Dict[Key, NSimplex], check: bool = True):
        self.source = source
        self.target = target
        self.mapping = dict(mapping)
        if check:
            self.validate()

    def __call__(self, x: NSimplex) -> NSimplex:
        return self.target.apply(x.degeneracy, self.mapping[x.base])

    def validate(self):
        for key in self.source.keys():
            if key not in self.mapping:
                raise NotASimplicialMap(f"{key!r} has no image")
            fx = self.mapping[key]
            n = self.source.dim(key)
            if fx.dim != n or fx.base not in self.target:
                raise NotASimplicialMap(f"bad image {fx} for {key!r}")
            for i in range(n + 1 if n else 0):
                if self(self.source.face(key, i)) != self.target.d(i, fx):
                    raise NotASimplicialMap(f"face {i} of {key!r} is not preserved")

    def compose(self, other: "SSetMap") -> "SSetMap":
        """``self o other``."""
        return SSetMap(other.source, self.target,
                       {k: self(v) for k, v in other.mapping.items()}, check=False)

    def is_injective(self) -> bool:
        images = [v for v in self.mapping.values()]
        return all(not v.is_degenerate() for v in images) and len({v.base for v in images}) == len(images)

    def is_isomorphism(self) -> bool:
        return self.is_injective() and len(self.mapping) == len(self.target)


# ---------------------------------------------------------------------------
# Constructions


def standard_simplex(n: int) -> SSet:
    """``Delta^n``: nondegenerate simplices are strictly increasing vertex tuples."""
    if n < 0:
        raise SSetError("n must be >= 0")
    faces = {}
    for k in range(n + 1):
        for inj in injections(k, n):
            v = inj.values
            faces[v] = [nd(v[:i] + v[i + 1:], k - 1) for i in range(k + 1)] if k else []
    return SSet(faces, check=False)


def standard_simplex_map(theta: MonotoneMap) -> SSetMap:
    """The simplicial map ``Delta^m -> Delta^n`` induced by ``theta``."""
    src, tgt = standard_simplex(theta.src), standard_simplex(theta.dst)
    mapping = {}
    for key in src.keys():
        img = MonotoneMap(tuple(theta.values[v] for v in key), theta.dst)
        ez = ez_factorize(img)
        mapping[key] = NSimplex(ez.surjection, ez.injection.values)
    return SSetMap(src, tgt, mapping, check=False)


def boundary(n: int) -> Tuple[SSet, SSetMap]:
    """``partial Delta^n`` with its inclusion into ``Delta^n``."""
    if n < 1:
        raise EmptyBoundary("the boundary of Delta^0 is empty")
    full = standard_simplex(n)
    top = tuple(range(n + 1))
    return full.subcomplex(k for k in full.keys() if k != top)


def point() -> SSet:
    return standard_simplex(0)


def quotient(S: SSet, A: Iterable[Key], point_key: Key = "*") -> Tuple[SSet, SSetMap]:
    """Collapse the subcomplex spanned by ``A`` to a single vertex."""
    aset = set(A)
    if not aset:
        raise NotASubcomplex("cannot collapse an empty subcomplex")
    for k in aset:
        for f in S.faces(k):
            if f.base not in aset:
                raise NotASubcomplex(f"{k!r} has face {f} outside the subset")
    if point_key in S and point_key not in aset:
        raise SSetError(f"point key {point_key!r} already names a simplex")

    def img(x: NSimplex) -> NSimplex:
        if x.base in aset:
            return NSimplex(MonotoneMap((0,) * (x.dim + 1), 0), point_key)
        return x

    faces = {point_key: []}
    for k in S.keys():
        if k not in aset:
            faces[k] = [img(f) for f in S.faces(k)]
    Q = SSet(faces, check=False)
    proj = SSetMap(S, Q, {k: img(S.nd(k)) for k in S.keys()}, check=False)
    return Q, proj


def simplex_mod_boundary(n: int) -> SSet:
    """``Delta^n / boundary``, a simplicial model of ``S^n``."""
    B, inc = boundary(n)
    Q, _ = quotient(standard_simplex(n), [inc.mapping[k].base for k in B.keys()])
    return Q


def product(S: SSet, T: SSet) -> SSet:
    """Cartesian product; nondegenerate simplices are jointly nondegenerate pairs.

    Keys are ``(x, s, y, t)`` standing for the pair ``(s^* x, t^* y)``.
    """
    return _product_with_projections(S, T)[0]


def product_with_projections(S: SSet, T: SSet) -> Tuple[SSet, SSetMap, SSetMap]:
    return _product_with_projections(S, T)


def _product_with_projections(S: SSet, T: SSet):
    faces = {}
    for p in range(S.dimension + 1):
        for q in range(T.dimension + 1):
            pairs = list(_joint_surjections(p, q))
            for x in S.simplices(p):
                for y in T.simplices(q):
                    for s, t in pairs:
                        key = (x, s.values, y, t.values)
                        m = s.src
                        if m == 0:
                            faces[key] = []
                            continue
                        fs = []
                        for i in range(m + 1):
                            a = S.apply(coface(m, i), NSimplex(s, x))
                            b = T.apply(coface(m, i), NSimplex(t, y))
                            pi, a2, b2 = _pair_normalize(a.degeneracy, b.degeneracy)
                            fs.append(NSimplex(pi, (a.base, a2.values, b.base, b2.values)))
                        faces[key] = fs
    P = SSet(faces, check=False)
    p1 = {k: NSimplex(MonotoneMap(k[1], S.dim(k[0])), k[0]) for k in P.keys()}
    p2 = {k: NSimplex(MonotoneMap(k[3], T.dim(k[2])), k[2]) for k in P.keys()}
    return P, SSetMap(P, S, p1, check=False), SSetMap(P, T, p2, check=False)


def pair_into_product(P: SSet, S: SSet, T: SSet, a: NSimplex, b: NSimplex) -> NSimplex:
    """Normal form in ``P = product(S, T)`` of the pair ``(a, b)``."""
    pi, a2, b2 = _pair_normalize(a.degeneracy, b.degeneracy)
    return NSimplex(pi, (a.base, a2.values, b.base, b2.values))


def product_map(f: SSetMap, g: SSetMap, P: SSet, Q: SSet) -> SSetMap:
    """``f x g : P -> Q`` where ``P``, ``Q`` are the products of the sources/targets."""
    mapping = {}
    for key in P.keys():
        x, s, y, t = key
        a = f(NSimplex(MonotoneMap(s, f.source.dim(x)), x))
        b = g(NSimplex(MonotoneMap(t, g.source.dim(y)), y))
        mapping[key] = pair_into_product(Q, f.target, g.target, a, b)
    return SSetMap(P, Q, mapping, check=False)


def pushout(f: SSetMap, g: SSetMap) -> Tuple[SSet, SSetMap, SSetMap]:
    """Pushout of ``X <-f- A -g-> Y`` with ``f`` injective (or ``g``, then swapped).

    Keys are tagged ``(0, y)`` for the ``Y`` side and ``(1, x)`` for cells of
    ``X`` outside the image of ``f``.  Returns the pushout and the two
    structure maps ``X -> P`` and ``Y -> P``.
    """
    if f.source is not g.source:
        raise UnsupportedPushout("the two legs need a common source")
    swapped = False
    if not f.is_injective():
        if not g.is_injective():
            raise UnsupportedPushout("neither leg is injective")
        f, g = g, f
        swapped = True
    X, Y = f.target, g.target
    back = {v.base: a for a, v in f.mapping.items()}

    def to_p(z: NSimplex) -> NSimplex:
        if z.base in back:
            w = g.mapping[back[z.base]]
            return NSimplex(compose(w.degeneracy, z.degeneracy), (0, w.base))
        return NSimplex(z.degeneracy, (1, z.base))

    faces = {}
    for y in Y.keys():
        faces[(0, y)] = [NSimplex(fc.degeneracy, (0, fc.base)) for fc in Y.faces(y)]
    for x in X.keys():
        if x not in back:
            faces[(1, x)] = [to_p(fc) for fc in X.faces(x)]
    P = SSet(faces, check=False)
    jx = SSetMap(X, P, {x: to_p(X.nd(x)) for x in X.keys()}, check=False)
    jy = SSetMap(Y, P, {y: P.nd((0, y)) for y in Y.keys()}, check=False)
    if swapped:
        jx, jy = jy, jx
    return P, jx, jy


def disjoint_union(S: SSet, T: SSet) -> SSet:
    faces = {}
    for tag, X in ((0, S), (1, T)):
        for k in X.keys():
            faces[(tag, k)] = [NSimplex(fc.degeneracy, (tag, fc.base)) for fc in X.faces(k)]
    return SSet(faces, check=False)


# ---------------------------------------------------------------------------
# Bisimplicial sets


@dataclass(frozen=True)
class BiSimplex:
    horizontal: MonotoneMap
    vertical: MonotoneMap
    base: Key

    @property
    def bidegree(self) -> Tuple[int, int]:
        return self.horizontal.src, self.vertical.src


class BiSSet:
    """A finite bisimplicial set in bi-normal form.

    ``hfaces[key]`` are the horizontal faces ``d^h_0 .. d^h_p`` and
    ``vfaces[key]`` the vertical faces ``d^v_0 .. d^v_q`` of a bi-nondegenerate
    bisimplex of bidegree ``(p, q)``.
    """

    def __init__(self, bidegree: Dict[Key, Tuple[int, int]],
                 hfaces: Dict[Key, Sequence[BiSimplex]],
                 vfaces: Dict[Key, Sequence[BiSimplex]], check: bool = True):
        self.bidegree = dict(bidegree)
        self.hfaces = {k: tuple(v) for k, v in hfaces.items()}
        self.vfaces = {k: tuple(v) for k, v in vfaces.items()}
        self._cache: Dict = {}
        if check:
            self.validate()

    def keys(self):
        return self.bidegree.keys()

    def nd(self, key) -> BiSimplex:
        p, q = self.bidegree[key]
        return BiSimplex(identity(p), identity(q), key)

    def apply(self, theta: MonotoneMap, phi: MonotoneMap, x: BiSimplex) -> BiSimplex:
        eh = ez_factorize(compose(x.horizontal, theta))
        ev = ez_factorize(compose(x.vertical, phi))
        y = self._restrict(eh.injection, ev.injection, x.base)
        return BiSimplex(compose(y.horizontal, eh.surjection), compose(y.vertical, ev.surjection), y.base)

    def _restrict(self, ih: MonotoneMap, iv: MonotoneMap, key) -> BiSimplex:
        if ih.src == ih.dst and iv.src == iv.dst:
            return BiSimplex(ih, iv, key)
        ck = (ih, iv, key)
        if ck in self._cache:
            return self._cache[ck]
        if ih.src != ih.dst:
            hit = set(ih.values)
            i = next(t for t in range(ih.dst + 1) if t not in hit)
            rest = MonotoneMap(tuple(v if v < i else v - 1 for v in ih.values), ih.dst - 1)
            out = self.apply(rest, iv, self.hfaces[key][i])
        else:
            hit = set(iv.values)
            i = next(t for t in range(iv.dst + 1) if t not in hit)
            rest = MonotoneMap(tuple(v if v < i else v - 1 for v in iv.values), iv.dst - 1)
            out = self.apply(ih, rest, self.vfaces[key][i])
        self._cache[ck] = out
        return out

    def validate(self):
        for key, (p, q) in self.bidegree.items():
            x = self.nd(key)
            for i in range(p + 1 if p else 0):
                for j in range(q + 1 if q else 0):
                    a = self.apply(coface(p, i), coface(q, j), x)
                    h = self.apply(identity(p - 1), coface(q, j), self.hfaces[key][i])
                    v = self.apply(coface(p, i), identity(q - 1), self.vfaces[key][j])
                    if not (a == h == v):
                        raise SSetError(f"horizontal and vertical faces do not commute on {key!r}")

    @classmethod
    def external_product(cls, S: SSet, T: SSet) -> "BiSSet":
        """``(p, q) -> S_p x T_q``."""
        bideg, hf, vf = {}, {}, {}
        for x in S.keys():
            for y in T.keys():
                p, q = S.dim(x), T.dim(y)
                key = (x, y)
                bideg[key] = (p, q)
                hf[key] = [BiSimplex(f.degeneracy, identity(q), (f.base, y)) for f in S.faces(x)]
                vf[key] = [BiSimplex(identity(p), f.degeneracy, (x, f.base)) for f in T.faces(y)]
        return cls(bideg, hf, vf, check=False)


def diag(B: BiSSet) -> SSet:
    """The diagonal simplicial set ``n -> B_{n,n}``.

    Keys are ``(base, h, v)`` for the bisimplex ``(h, v)^* base``.
    """
    faces = {}
    by_bideg = defaultdict(list)
    for k, pq in B.bidegree.items():
        by_bideg[pq].append(k)
    for (p, q), keys in by_bideg.items():
        pairs = list(_joint_surjections(p, q))
        for base in keys:
            for s, t in pairs:
                key = (base, s.values, t.values)
                m = s.src
                if m == 0:
                    faces[key] = []
                    continue
                fs = []
                for i in range(m + 1):
                    c = coface(m, i)
                    z = B.apply(c, c, BiSimplex(s, t, base))
                    pi, a2, b2 = _pair_normalize(z.horizontal, z.vertical)
                    fs.append(NSimplex(pi, (z.base, a2.values, b2.values)))
                faces[key] = fs
    return SSet(faces, check=False)


# ---------------------------------------------------------------------------
# Isomorphism search


def find_isomorphism(S: SSet, T: SSet, limit: int = 200000) -> Optional[SSetMap]:
    """Search for an isomorphism ``S -> T`` by backtracking from the top dimension.

    Assigning a simplex forces the images of all its faces, so the search
    only branches on simplices that are not faces of an already assigned
    one.  ``limit`` caps the number of branch points visited.
    """
    if S.f_vector() != T.f_vector():
        return None
    cof_s, cof_t = _coface_counts(S), _coface_counts(T)

    def sig(X, cof, k):
        return (X.dim(k), tuple(f.degeneracy.values for f in X.faces(k)), cof[k])

    cand: Dict = defaultdict(list)
    for k in T.keys():
        cand[sig(T, cof_t, k)].append(k)
    for k in S.keys():
        if not cand.get(sig(S, cof_s, k)):
            return None
    order = sorted(S.keys(), key=lambda k: -S.dim(k))
    sigs = {k: sig(S, cof_s, k) for k in order}
    budget = [limit]

    def assign(x, y, fwd, inv, trail):
        stack = [(x, y)]
        while stack:
            a, b = stack.pop()
            if a in fwd:
                if fwd[a] != b:
                    return False
                continue
            if b in inv or sigs[a] != sig(T, cof_t, b):
                return False
            fwd[a], inv[b] = b, a
            trail.append(a)
            for fa, fb in zip(S.faces(a), T.faces(b)):
                if fa.degeneracy != fb.degeneracy:
                    return False
                stack.append((fa.base, fb.base))
        return True

    def undo(fwd, inv, trail, mark):
        while len(trail) > mark:
            a = trail.pop()
            del inv[fwd.pop(a)]

    fwd, inv, trail = {}, {}, []

    def search(idx):
        while idx < len(order) and order[idx] in fwd:
            idx += 1
        if idx == len(order):
            return True
        budget[0] -= 1
        if budget[0] < 0:
            raise RuntimeError("isomorphism search budget exhausted")
        x = order[idx]
        for y in cand[sigs[x]]:
            if y in inv:
                continue
            mark = len(trail)
            if assign(x, y, fwd, inv, trail) and search(idx + 1):
                return True
            undo(fwd, inv, trail, mark)
        return False

    if not search(0):
        return None
    return SSetMap(S, T, {k: T.nd(v) for k, v in fwd.items()}, check=True)


def _coface_counts(S: SSet):
    cnt = defaultdict(int)
    for k in S.keys():
        for f in S.faces(k):
            cnt[f.base] += 1
    return cnt


def is_isomorphic(S: SSet, T: SSet) -> bool:
    return find_isomorphism(S, T) is not None

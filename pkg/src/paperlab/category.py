"""Finite categories stored extensionally, and functors between them."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

Obj = Hashable
Mor = Hashable


class CategoryError(ValueError):
    pass


class NotAFunctor(CategoryError):
    pass


class FinCat:
    """A finite category with a total composition table.

    Parameters
    ----------
    objects : sequence of objects
    morphisms : mapping ``morphism -> (source, target)``
    identities : mapping ``object -> identity morphism``
    composition : mapping ``(g, f) -> g o f`` for every composable pair
        ``f: a -> b``, ``g: b -> c``.  Pairs involving an identity may be
        omitted; they are filled in.
    generators : optional mapping ``edge -> morphism`` recorded when the
        category was realized from a presentation.
    """

    def __init__(self, objects, morphisms, identities, composition, check: bool = False,
                 generators: Optional[Dict] = None, name: str = ""):
        self.objects: List[Obj] = list(objects)
        self.morphisms: Dict[Mor, Tuple[Obj, Obj]] = dict(morphisms)
        self.identities: Dict[Obj, Mor] = dict(identities)
        self._id_set = set(self.identities.values())
        self._comp: Dict[Tuple[Mor, Mor], Mor] = dict(composition)
        self._hom: Dict[Tuple[Obj, Obj], List[Mor]] = defaultdict(list)
        self._out: Dict[Obj, List[Mor]] = defaultdict(list)
        self._in: Dict[Obj, List[Mor]] = defaultdict(list)
        for m, (a, b) in self.morphisms.items():
            self._hom[(a, b)].append(m)
            self._out[a].append(m)
            self._in[b].append(m)
        for m, (a, b) in self.morphisms.items():
            self._comp.setdefault((m, self.identities[a]), m)
            self._comp.setdefault((self.identities[b], m), m)
        self.generators = generators
        self.name = name
        if check:
            self.validate()

    def __repr__(self):
        label = f"{self.name} " if self.name else ""
        return f"FinCat({label}objects={len(self.objects)}, morphisms={len(self.morphisms)})"

    # -- access --------------------------------------------------------
    def src(self, m: Mor) -> Obj:
        return self.morphisms[m][0]

    def tgt(self, m: Mor) -> Obj:
        return self.morphisms[m][1]

    def ident(self, a: Obj) -> Mor:
        return self.identities[a]

    def is_identity(self, m: Mor) -> bool:
        return m in self._id_set

    def hom(self, a: Obj, b: Obj) -> List[Mor]:
        return self._hom.get((a, b), [])

    def out_of(self, a: Obj) -> List[Mor]:
        return self._out.get(a, [])

    def into(self, b: Obj) -> List[Mor]:
        return self._in.get(b, [])

    def comp(self, g: Mor, f: Mor) -> Mor:
        """``g o f``."""
        try:
            return self._comp[(g, f)]
        except KeyError:
            raise CategoryError(f"{g!r} and {f!r} are not composable") from None

    def compose_path(self, path: Sequence[Mor], start: Obj = None) -> Mor:
        """Composite of ``path`` read left to right (first morphism first)."""
        if not path:
            return self.identities[start]
        out = path[0]
        for m in path[1:]:
            out = self.comp(m, out)
        return out

    def non_identities(self) -> List[Mor]:
        return [m for m in self.morphisms if m not in self._id_set]

    def composable_pairs(self):
        for f, (a, b) in self.morphisms.items():
            for g in self._out.get(b, ()):
                yield g, f

    def size(self) -> Tuple[int, int]:
        return len(self.objects), len(self.morphisms)

    # -- laws ----------------------------------------------------------
    def validate(self):
        obs = set(self.objects)
        if set(self.identities) != obs:
            raise CategoryError("every object needs exactly one identity")
        for a, i in self.identities.items():
            if self.morphisms.get(i) != (a, a):
                raise CategoryError(f"identity of {a!r} has wrong endpoints")
        for m, (a, b) in self.morphisms.items():
            if a not in obs or b not in obs:
                raise CategoryError(f"{m!r} has endpoints outside the object set")
        for g, f in self.composable_pairs():
            h = self._comp.get((g, f))
            if h is None:
                raise CategoryError(f"missing composite {g!r} o {f!r}")
            if self.morphisms.get(h) != (self.src(f), self.tgt(g)):
                raise CategoryError(f"composite {g!r} o {f!r} has wrong endpoints")
        for f in self.morphisms:
            if self.comp(f, self.ident(self.src(f))) != f or self.comp(self.ident(self.tgt(f)), f) != f:
                raise CategoryError(f"identity law fails at {f!r}")
        for g, f in self.composable_pairs():
            gf = self._comp[(g, f)]
            for h in self._out.get(self.tgt(g), ()):
                if self._comp[(h, gf)] != self._comp[(self._comp[(h, g)], f)]:
                    raise CategoryError(f"associativity fails at {h!r}, {g!r}, {f!r}")

    # -- directedness --------------------------------------------------
    def directedness(self) -> "DirectednessCertificate":
        """A linear order strictly increased by non-identity morphisms, or a cycle."""
        succ = defaultdict(set)
        for m, (a, b) in self.morphisms.items():
            if m in self._id_set:
                continue
            if a == b:
                return DirectednessCertificate(None, (a,))
            succ[a].add(b)
        color, order = {}, []
        for root in self.objects:
            if root in color:
                continue
            stack = [(root, iter(sorted(succ[root], key=self.objects.index)))]
            color[root] = 1
            while stack:
                node, it = stack[-1]
                nxt = next(it, None)
                if nxt is None:
                    color[node] = 2
                    order.append(node)
                    stack.pop()
                elif color.get(nxt) == 1:
                    cyc = [nxt]
                    for v, _ in reversed(stack):
                        cyc.append(v)
                        if v == nxt:
                            break
                    return DirectednessCertificate(None, tuple(reversed(cyc)))
                elif nxt not in color:
                    color[nxt] = 1
                    stack.append((nxt, iter(sorted(succ[nxt], key=self.objects.index))))
        return DirectednessCertificate(tuple(reversed(order)), None)

    def is_directed(self) -> bool:
        return self.directedness().order is not None


@dataclass(frozen=True)
class DirectednessCertificate:
    order: Optional[Tuple[Obj, ...]]
    cycle: Optional[Tuple[Obj, ...]]

    def validate(self, C: FinCat) -> bool:
        if self.order is None:
            cyc = self.cycle
            if len(cyc) == 1:
                return any(not C.is_identity(m) for m in C.hom(cyc[0], cyc[0]))
            return all(C.hom(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1]))
        pos = {o: i for i, o in enumerate(self.order)}
        return all(pos[C.src(m)] < pos[C.tgt(m)] for m in C.non_identities())


class Functor:
    def __init__(self, source: FinCat, target: FinCat, on_objects: Dict, on_morphisms: Dict,
                 check: bool = False):
        self.source = source
        self.target = target
        self.on_objects = dict(on_objects)
        self.on_morphisms = dict(on_morphisms)
        if check:
            self.validate()

    def __call__(self, m: Mor) -> Mor:
        return self.on_morphisms[m]

    def ob(self, a: Obj) -> Obj:
        return self.on_objects[a]

    def validate(self):
        S, T = self.source, self.target
        for a in S.objects:
            if self.on_objects.get(a) not in T.identities:
                raise NotAFunctor(f"object {a!r} has no valid image")
            if self.on_morphisms.get(S.ident(a)) != T.ident(self.on_objects[a]):
                raise NotAFunctor(f"identity of {a!r} not preserved")
        for m, (a, b) in S.morphisms.items():
            fm = self.on_morphisms.get(m)
            if fm not in T.morphisms or T.morphisms[fm] != (self.on_objects[a], self.on_objects[b]):
                raise NotAFunctor(f"morphism {m!r} has bad image {fm!r}")
        for g, f in S.composable_pairs():
            if self.on_morphisms[S.comp(g, f)] != T.comp(self.on_morphisms[g], self.on_morphisms[f]):
                raise NotAFunctor(f"composite {g!r} o {f!r} not preserved")

    def compose(self, other: "Functor") -> "Functor":
        """``self o other``."""
        return Functor(other.source, self.target,
                       {a: self.on_objects[b] for a, b in other.on_objects.items()},
                       {m: self.on_morphisms[n] for m, n in other.on_morphisms.items()})

    def is_isomorphism(self) -> bool:
        return (len(set(self.on_objects.values())) == len(self.source.objects) == len(self.target.objects)
                and len(set(self.on_morphisms.values())) == len(self.source.morphisms) == len(self.target.morphisms))

    def equals(self, other: "Functor") -> bool:
        return self.on_objects == other.on_objects and self.on_morphisms == other.on_morphisms


def identity_functor(C: FinCat) -> Functor:
    return Functor(C, C, {a: a for a in C.objects}, {m: m for m in C.morphisms})


# ---------------------------------------------------------------------------
# Constructions


def ordinal(n: int) -> FinCat:
    """The poset ``[n]`` as a category; the morphism ``i <= j`` is keyed ``(i, j)``."""
    objs = list(range(n + 1))
    mors = {(i, j): (i, j) for i in objs for j in objs if i <= j}
    comp = {((j, k), (i, j)): (i, k) for (i, j) in mors for (jj, k) in mors if jj == j}
    return FinCat(objs, mors, {i: (i, i) for i in objs}, comp, name=f"[{n}]")


def terminal() -> FinCat:
    return ordinal(0)


def discrete(objects: Iterable[Obj]) -> FinCat:
    objs = list(objects)
    return FinCat(objs, {("id", a): (a, a) for a in objs}, {a: ("id", a) for a in objs}, {})


def poset(elements: Iterable, leq) -> FinCat:
    """Category of a finite poset; the morphism ``a <= b`` is keyed ``(a, b)``."""
    objs = list(elements)
    mors = {(a, b): (a, b) for a in objs for b in objs if leq(a, b)}
    comp = {}
    for (a, b) in mors:
        for c in objs:
            if (b, c) in mors:
                comp[((b, c), (a, b))] = (a, c)
    return FinCat(objs, mors, {a: (a, a) for a in objs}, comp)


def face_poset(n: int) -> FinCat:
    """Nonempty faces of ``Delta^n`` (as sorted tuples) ordered by inclusion."""
    from itertools import combinations
    faces = [c for k in range(1, n + 2) for c in combinations(range(n + 1), k)]
    C = poset(faces, lambda a, b: set(a) <= set(b))
    C.name = f"F_{n}"
    return C


def cat_product(C: FinCat, D: FinCat) -> FinCat:
    objs = [(a, b) for a in C.objects for b in D.objects]
    mors = {(f, g): ((C.src(f), D.src(g)), (C.tgt(f), D.tgt(g))) for f in C.morphisms for g in D.morphisms}
    ids = {(a, b): (C.ident(a), D.ident(b)) for a, b in objs}
    comp = {}
    for g1, f1 in C.composable_pairs():
        h1 = C.comp(g1, f1)
        for g2, f2 in D.composable_pairs():
            comp[((g1, g2), (f1, f2))] = (h1, D.comp(g2, f2))
    return FinCat(objs, mors, ids, comp)


def product_projections(C: FinCat, D: FinCat, P: FinCat) -> Tuple[Functor, Functor]:
    p1 = Functor(P, C, {o: o[0] for o in P.objects}, {m: m[0] for m in P.morphisms})
    p2 = Functor(P, D, {o: o[1] for o in P.objects}, {m: m[1] for m in P.morphisms})
    return p1, p2


def cat_coproduct(C: FinCat, D: FinCat) -> FinCat:
    objs = [(0, a) for a in C.objects] + [(1, b) for b in D.objects]
    mors, ids, comp = {}, {}, {}
    for tag, X in ((0, C), (1, D)):
        for m, (a, b) in X.morphisms.items():
            mors[(tag, m)] = ((tag, a), (tag, b))
        for a, i in X.identities.items():
            ids[(tag, a)] = (tag, i)
        for g, f in X.composable_pairs():
            comp[((tag, g), (tag, f))] = (tag, X.comp(g, f))
    return FinCat(objs, mors, ids, comp)


def opposite(C: FinCat) -> FinCat:
    """Same object and morphism names, arrows reversed."""
    mors = {m: (b, a) for m, (a, b) in C.morphisms.items()}
    comp = {(f, g): C.comp(g, f) for g, f in C.composable_pairs()}
    return FinCat(C.objects, mors, C.identities, comp, name=f"{C.name}^op" if C.name else "")


def full_subcategory(C: FinCat, objects: Iterable[Obj]) -> FinCat:
    obs = [o for o in C.objects if o in set(objects)]
    oset = set(obs)
    mors = {m: ab for m, ab in C.morphisms.items() if ab[0] in oset and ab[1] in oset}
    comp = {(g, f): C.comp(g, f) for g, f in C.composable_pairs() if g in mors and f in mors}
    return FinCat(obs, mors, {o: C.ident(o) for o in obs}, comp)


def morphism_category(C: FinCat) -> FinCat:
    """Objects are morphisms ``f: c1 -> d1``; a morphism ``f -> g`` (``g: c2 -> d2``)
    is a pair ``u: c2 -> c1``, ``v: d1 -> d2`` with ``v o f o u = g``.

    Morphisms are keyed ``(f, u, v)``.
    """
    objs = list(C.morphisms)
    mors, ids = {}, {}
    for f in objs:
        c1, d1 = C.morphisms[f]
        for v in C.out_of(d1):
            vf = C.comp(v, f)
            for u in C.into(c1):
                g = C.comp(vf, u)
                mors[(f, u, v)] = (f, g)
        ids[f] = (f, C.ident(c1), C.ident(d1))
    comp = {}
    by_src = defaultdict(list)
    for m, (a, _) in mors.items():
        by_src[a].append(m)
    for (f, u, v), (_, g) in mors.items():
        for (g2, u2, v2) in by_src[g]:
            comp[((g2, u2, v2), (f, u, v))] = (f, C.comp(u, u2), C.comp(v2, v))
    M = FinCat(objs, mors, ids, comp)
    M.name = f"{C.name}'" if C.name else ""
    return M


def terminal_objects(C: FinCat) -> List[Obj]:
    return [t for t in C.objects if all(len(C.hom(c, t)) == 1 for c in C.objects)]


def has_terminal_object(C: FinCat) -> Optional[Obj]:
    """A terminal object, if one exists (unique up to unique isomorphism)."""
    ts = terminal_objects(C)
    return ts[0] if ts else None


def initial_objects(C: FinCat) -> List[Obj]:
    return [t for t in C.objects if all(len(C.hom(t, c)) == 1 for c in C.objects)]


# ---------------------------------------------------------------------------
# Isomorphism search


def _refine_colors(C: FinCat) -> Dict[Obj, int]:
    objs = C.objects
    hs = {(a, b): len(C.hom(a, b)) for a in objs for b in objs}
    colors = {a: (hs[(a, a)],) for a in objs}
    for _ in range(len(objs) + 1):
        sig = {a: (colors[a],
                   tuple(sorted((colors[b], hs[(a, b)]) for b in objs if hs[(a, b)])),
                   tuple(sorted((colors[b], hs[(b, a)]) for b in objs if hs[(b, a)])))
               for a in objs}
        new = {a: hash(sig[a]) for a in objs}
        if len(set(new.values())) == len(set(colors.values())):
            colors = new
            break
        colors = new
    return colors


def find_isomorphism(C: FinCat, D: FinCat, limit: int = 100000) -> Optional[Functor]:
    """Backtracking search for an isomorphism of categories ``C -> D``."""
    if C.size() != D.size():
        return None
    cc, cd = _refine_colors(C), _refine_colors(D)
    if sorted(cc.values()) != sorted(cd.values()):
        return None
    by_color = defaultdict(list)
    for b in D.objects:
        by_color[cd[b]].append(b)
    # most constrained objects first
    order = sorted(C.objects, key=lambda a: (len(by_color[cc[a]]), -len(C.out_of(a)) - len(C.into(a))))
    obmap, used = {}, set()
    budget = [limit]

    def consistent(a, b):
        for a2, b2 in obmap.items():
            if len(C.hom(a, a2)) != len(D.hom(b, b2)) or len(C.hom(a2, a)) != len(D.hom(b2, b)):
                return False
        return len(C.hom(a, a)) == len(D.hom(b, b))

    def obsearch(i):
        if i == len(order):
            return morsearch()
        budget[0] -= 1
        if budget[0] < 0:
            raise RuntimeError("isomorphism search budget exhausted")
        a = order[i]
        for b in by_color[cc[a]]:
            if b in used or not consistent(a, b):
                continue
            obmap[a] = b
            used.add(b)
            res = obsearch(i + 1)
            if res is not None:
                return res
            del obmap[a]
            used.discard(b)
        return None

    def morsearch():
        fwd = {C.ident(a): D.ident(b) for a, b in obmap.items()}
        inv = {v: k for k, v in fwd.items()}
        pending = [m for m in C.morphisms if m not in fwd]
        pending.sort(key=lambda m: len(C.hom(*C.morphisms[m])))

        def force(m, n, trail):
            stack = [(m, n)]
            while stack:
                x, y = stack.pop()
                if x in fwd:
                    if fwd[x] != y:
                        return False
                    continue
                if y in inv:
                    return False
                a, b = C.morphisms[x]
                if D.morphisms[y] != (obmap[a], obmap[b]):
                    return False
                fwd[x], inv[y] = y, x
                trail.append(x)
                for g in C.out_of(b):
                    if g in fwd:
                        stack.append((C.comp(g, x), D.comp(fwd[g], y)))
                for f in C.into(a):
                    if f in fwd:
                        stack.append((C.comp(x, f), D.comp(y, fwd[f])))
            return True

        def undo(trail, mark):
            while len(trail) > mark:
                x = trail.pop()
                del inv[fwd.pop(x)]

        trail: List = []

        def search(i):
            while i < len(pending) and pending[i] in fwd:
                i += 1
            if i == len(pending):
                return True
            budget[0] -= 1
            if budget[0] < 0:
                raise RuntimeError("isomorphism search budget exhausted")
            m = pending[i]
            a, b = C.morphisms[m]
            for n in D.hom(obmap[a], obmap[b]):
                if n in inv:
                    continue
                mark = len(trail)
                if force(m, n, trail) and search(i + 1):
                    return True
                undo(trail, mark)
            return False

        if search(0):
            F = Functor(C, D, dict(obmap), dict(fwd))
            F.validate()
            return F
        return None

    return obsearch(0)


def is_isomorphic(C: FinCat, D: FinCat) -> bool:
    return find_isomorphism(C, D) is not None

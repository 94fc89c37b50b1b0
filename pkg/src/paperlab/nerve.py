"""The nerve and its left adjoint, the categorification ``cat``."""
from __future__ import annotations

from typing import Dict, List, Tuple

from .category import FinCat, Functor, cat_product
from .delta import MonotoneMap
from .presentation import (
    DEFAULT_BOUND,
    CatPresentation,
    PresentationBuilder,
    realize_presentation,
)
from .sset import NSimplex, SSet, SSetMap, nd, product_with_projections


class InfiniteNerve(ValueError):
    """The category has a cycle of non-identity morphisms, so its nerve is infinite."""

    def __init__(self, cycle):
        super().__init__(f"non-identity cycle through {cycle!r}")
        self.cycle = cycle


def nerve(C: FinCat) -> SSet:
    """Nerve of a directed finite category.

    The nondegenerate ``n``-simplex ``c0 -f1-> c1 ... -fn-> cn`` is keyed
    ``(c0, f1, ..., fn)``; vertices are ``(c,)``.
    """
    cert = C.directedness()
    if cert.order is None:
        raise InfiniteNerve(cert.cycle)
    faces: Dict = {}
    level = [(c,) for c in C.objects]
    for v in level:
        faces[v] = []
    nonid = {c: [m for m in C.out_of(c) if not C.is_identity(m)] for c in C.objects}
    n = 0
    while level:
        n += 1
        nxt = []
        for chain in level:
            end = C.tgt(chain[-1]) if len(chain) > 1 else chain[0]
            for f in nonid[end]:
                nxt.append(chain + (f,))
        for key in nxt:
            faces[key] = _nerve_faces(C, key)
        level = nxt
    return SSet(faces, check=False)


def _nerve_faces(C: FinCat, key) -> List[NSimplex]:
    c0, mors = key[0], key[1:]
    n = len(mors)
    out = []
    for i in range(n + 1):
        if i == 0:
            sub = (C.tgt(mors[0]),) + mors[1:]
        elif i == n:
            sub = (c0,) + mors[:-1]
        else:
            sub = (c0,) + mors[: i - 1] + (C.comp(mors[i], mors[i - 1]),) + mors[i + 1:]
        out.append(nd(sub, n - 1))
    return out


def chain_simplex(C: FinCat, start, mors) -> NSimplex:
    """Normal form in ``nerve(C)`` of a chain that may contain identities."""
    vals, kept, level = [0], [], 0
    for m in mors:
        if not C.is_identity(m):
            level += 1
            kept.append(m)
        vals.append(level)
    return NSimplex(MonotoneMap(tuple(vals), level), (start,) + tuple(kept))


def nerve_map(F: Functor, source: SSet = None, target: SSet = None) -> SSetMap:
    source = source or nerve(F.source)
    target = target or nerve(F.target)
    mapping = {}
    for key in source.keys():
        mapping[key] = chain_simplex(F.target, F.ob(key[0]), [F(m) for m in key[1:]])
    return SSetMap(source, target, mapping, check=False)


# ---------------------------------------------------------------------------
# Categorification


def cat_presentation(S: SSet) -> CatPresentation:
    """Graph of vertices and nondegenerate edges (``d1 x -> d0 x``), one relation per 2-simplex."""
    verts = S.simplices(0)
    edges = {}
    for e in S.simplices(1):
        d0, d1 = S.face(e, 0), S.face(e, 1)
        edges[e] = (d1.base, d0.base)
    P = CatPresentation(verts, edges)

    def as_path(x: NSimplex):
        return () if x.is_degenerate() else (x.base,)

    for y in S.simplices(2):
        d0, d1, d2 = S.faces(y)
        v0 = S.vertices_of(S.nd(y))[0]
        P.add_relation(as_path(d2) + as_path(d0), as_path(d1), v0, S.vertices_of(S.nd(y))[2])
    return P


def cat(S: SSet, bound: int = DEFAULT_BOUND) -> FinCat:
    """The categorification of ``S``; objects are the vertex keys of ``S``."""
    return realize_presentation(cat_presentation(S), bound=bound)


def cat_map(f: SSetMap, source: FinCat = None, target: FinCat = None,
            bound: int = DEFAULT_BOUND) -> Functor:
    """``cat(f)``: sends each edge generator to the image edge (or an identity)."""
    source = source or cat(f.source, bound)
    target = target or cat(f.target, bound)
    gen_img = {}
    for e in f.source.simplices(1):
        img = f.mapping[e]
        if img.is_degenerate():
            gen_img[e] = target.ident(img.base)
        else:
            gen_img[e] = target.generators[img.base]
    obj = {v: f.mapping[v].base for v in f.source.simplices(0)}
    mor = {}
    for m, (a, b) in source.morphisms.items():
        start, word = m
        mor[m] = target.compose_path([gen_img[e] for e in word], obj[start])
    return Functor(source, target, obj, mor)


def cat_nerve_counit(C: FinCat, bound: int = DEFAULT_BOUND) -> Functor:
    """The canonical functor ``cat(nerve(C)) -> C``."""
    N = nerve(C)
    K = cat(N, bound)
    obj = {v: v[0] for v in K.objects}
    gen = {e: e[1] for e in N.simplices(1)}
    mor = {m: C.compose_path([gen[e] for e in m[1]], obj[m[0]]) for m in K.morphisms}
    return Functor(K, C, obj, mor)


def cat_product_comparison(S: SSet, T: SSet, bound: int = DEFAULT_BOUND) -> Functor:
    """The canonical functor ``cat(S x T) -> cat(S) x cat(T)``."""
    P, p1, p2 = product_with_projections(S, T)
    cP, cS, cT = cat(P, bound), cat(S, bound), cat(T, bound)
    f1 = cat_map(p1, cP, cS)
    f2 = cat_map(p2, cP, cT)
    prod = cat_product(cS, cT)
    return Functor(cP, prod,
                   {a: (f1.ob(a), f2.ob(a)) for a in cP.objects},
                   {m: (f1(m), f2(m)) for m in cP.morphisms})


def nerve_cat_unit(S: SSet, bound: int = DEFAULT_BOUND) -> SSetMap:
    """The unit ``S -> nerve(cat(S))``; defined on simplices of dimension <= 2 and above
    by the vertex-to-edge data, since nerves are 2-coskeletal."""
    C = cat(S, bound)
    N = nerve(C)
    mapping = {}
    for key in S.keys():
        x = S.nd(key)
        n = x.dim
        verts = S.vertices_of(x)
        mors = []
        for i in range(n):
            e = S.apply(MonotoneMap((i, i + 1), n), x)
            mors.append(C.ident(e.base) if e.is_degenerate() else C.generators[e.base])
        mapping[key] = chain_simplex(C, verts[0], mors)
    return SSetMap(S, N, mapping, check=False)


# ---------------------------------------------------------------------------
# Pushouts in Cat


def cat_pushout(f: Functor, g: Functor, bound: int = DEFAULT_BOUND) -> Tuple[FinCat, Functor, Functor]:
    """Pushout of ``X <-f- A -g-> Y`` in Cat.

    Both categories are presented by all their non-identity morphisms and
    composition tables, glued along ``f(a) = g(a)``, and the merged
    presentation is realized by congruence closure.  Returns the pushout and
    the two structure functors.
    """
    if f.source is not g.source:
        raise ValueError("pushout legs need a common source")
    A, X, Y = f.source, f.target, g.target
    B = PresentationBuilder()
    for tag, Z in (("X", X), ("Y", Y)):
        for o in Z.objects:
            B.vertex((tag, o))
        for m in Z.non_identities():
            a, b = Z.morphisms[m]
            B.edge((tag, m), (tag, a), (tag, b))
    for a in A.objects:
        B.identify(("X", f.ob(a)), ("Y", g.ob(a)))

    def path(tag, Z, m):
        return () if Z.is_identity(m) else ((tag, m),)

    for tag, Z in (("X", X), ("Y", Y)):
        for h, k in Z.composable_pairs():
            if Z.is_identity(h) or Z.is_identity(k):
                continue
            B.relation(path(tag, Z, k) + path(tag, Z, h), path(tag, Z, Z.comp(h, k)), at=(tag, Z.src(k)))
    for m in A.non_identities():
        B.relation(path("X", X, f(m)), path("Y", Y, g(m)), at=("X", f.ob(A.src(m))))
    P = realize_presentation(B.build(), bound=bound)

    def leg(tag, Z):
        obj = {o: B.find((tag, o)) for o in Z.objects}
        mor = {}
        for m in Z.morphisms:
            mor[m] = P.ident(obj[Z.src(m)]) if Z.is_identity(m) else P.generators[(tag, m)]
        return Functor(Z, P, obj, mor)

    return P, leg("X", X), leg("Y", Y)


def functor_from_generators(C: FinCat, D: FinCat, obj: Dict, gen_img: Dict) -> Functor:
    """Extend an assignment on the generators of a presented category ``C``."""
    mor = {m: D.compose_path([gen_img[e] for e in m[1]], obj[m[0]]) for m in C.morphisms}
    return Functor(C, D, obj, mor)


def collapse_functor(C: FinCat, P: FinCat = None) -> Functor:
    """The unique functor to the terminal category."""
    from .category import terminal
    T = P or terminal()
    t = T.objects[0]
    return Functor(C, T, {o: t for o in C.objects}, {m: T.ident(t) for m in C.morphisms})


def inclusion_functor(A: FinCat, X: FinCat, obj: Dict = None, mor: Dict = None) -> Functor:
    """Inclusion of a subcategory with shared names (or the given renaming)."""
    obj = obj or {o: o for o in A.objects}
    mor = mor or {m: m for m in A.morphisms}
    return Functor(A, X, obj, mor)

"""Category-valued diagrams and the two-sided construction ``C(F, K, G)``.

For ``F: K^op -> Cat`` and ``G: K -> Cat`` the category ``C(F, K, G)`` has
objects ``(x, k, y)`` and morphisms ``(f, alpha, g)`` with
``alpha: k0 -> k1``, ``f: x0 -> F(alpha)(x1)`` and ``g: G(alpha)(y0) -> y1``.
A morphism is keyed ``(f, x1, alpha, y0, g)``, which pins down both ends.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Dict, Hashable, List, Tuple

from .category import (
    FinCat,
    Functor,
    cat_product,
    discrete,
    identity_functor,
    opposite,
    ordinal,
    poset,
    terminal,
)
from .homology import homology, is_homology_equivalence
from .nerve import nerve, nerve_map
from .presentation import DEFAULT_BOUND
from .realize import CatCoend, CoendData, coend_cat


class NotLevelwiseEquivalence(ValueError):
    """A component of a transformation is not a weak (homology) equivalence."""


class CatDiagram:
    """A covariant functor ``index -> Cat``.

    Contravariant diagrams on ``K`` are diagrams on ``opposite(K)``, which
    shares the morphism names of ``K``.
    """

    def __init__(self, index: FinCat, cats: Dict[Hashable, FinCat], functors: Dict[Hashable, Functor],
                 name: str = ""):
        self.index = index
        self.cats = dict(cats)
        self.functors = dict(functors)
        self.name = name

    def __call__(self, k) -> FinCat:
        return self.cats[k]

    def map(self, alpha) -> Functor:
        return self.functors[alpha]

    def validate(self):
        K = self.index
        for a in K.morphisms:
            F = self.functors[a]
            if F.source is not self.cats[K.src(a)] or F.target is not self.cats[K.tgt(a)]:
                raise ValueError(f"functor for {a!r} has the wrong endpoints")
            F.validate()
        for k in K.objects:
            if not self.functors[K.ident(k)].equals(identity_functor(self.cats[k])):
                raise ValueError(f"identity at {k!r} is not preserved")
        for g, f in K.composable_pairs():
            if not self.functors[g].compose(self.functors[f]).equals(self.functors[K.comp(g, f)]):
                raise ValueError(f"composite {g!r} o {f!r} is not preserved")
        return True


def constant_diagram(K: FinCat, C: FinCat = None, name: str = "") -> CatDiagram:
    C = C if C is not None else terminal()
    I = identity_functor(C)
    return CatDiagram(K, {k: C for k in K.objects}, {a: I for a in K.morphisms}, name=name or "const")


def point_diagram(K: FinCat) -> CatDiagram:
    """The constant diagram on the terminal category."""
    return constant_diagram(K, terminal(), name="*")


def hom_diagram(K: FinCat, k) -> CatDiagram:
    """``K(-, k)`` as a diagram on ``K^op`` of discrete categories."""
    Kop = opposite(K)
    cats = {k0: discrete(K.hom(k0, k)) for k0 in K.objects}
    functors = {}
    for a in K.morphisms:
        k0, k1 = K.src(a), K.tgt(a)
        src, tgt = cats[k1], cats[k0]
        obj = {b: K.comp(b, a) for b in src.objects}
        functors[a] = Functor(src, tgt, obj, {src.ident(b): tgt.ident(c) for b, c in obj.items()})
    return CatDiagram(Kop, cats, functors, name=f"K(-,{k})")


class NatTrans:
    """A natural transformation between diagrams on the same index."""

    def __init__(self, source: CatDiagram, target: CatDiagram, components: Dict[Hashable, Functor]):
        self.source = source
        self.target = target
        self.components = dict(components)

    def __getitem__(self, k) -> Functor:
        return self.components[k]

    def validate(self):
        K = self.source.index
        for a in K.morphisms:
            lhs = self.target.map(a).compose(self.components[K.src(a)])
            rhs = self.components[K.tgt(a)].compose(self.source.map(a))
            if not lhs.equals(rhs):
                raise ValueError(f"naturality fails at {a!r}")
        return True


def identity_transformation(D: CatDiagram) -> NatTrans:
    return NatTrans(D, D, {k: identity_functor(D(k)) for k in D.index.objects})


# ---------------------------------------------------------------------------
# Two-sided construction


class TwoSided(FinCat):
    """``C(F, K, G)``; keeps the defining data for induced functors."""

    F: CatDiagram
    K: FinCat
    G: CatDiagram


def two_sided(F: CatDiagram, K: FinCat, G: CatDiagram) -> TwoSided:
    """The category ``C(F, K, G)`` for ``F`` on ``K^op`` and ``G`` on ``K``."""
    objects = [(x, k, y) for k in K.objects for x in F(k).objects for y in G(k).objects]
    mors: Dict = {}
    ids: Dict = {}
    for a in K.morphisms:
        k0, k1 = K.morphisms[a]
        Fa, Ga = F.map(a), G.map(a)
        Fk0, Gk1 = F(k0), G(k1)
        for x1 in F(k1).objects:
            for y0 in G(k0).objects:
                for f in Fk0.into(Fa.ob(x1)):
                    for g in Gk1.out_of(Ga.ob(y0)):
                        mors[(f, x1, a, y0, g)] = ((Fk0.src(f), k0, y0), (x1, k1, Gk1.tgt(g)))
    for x, k, y in objects:
        ids[(x, k, y)] = (F(k).ident(x), x, K.ident(k), y, G(k).ident(y))
    by_src: Dict = {}
    for m, (s, _) in mors.items():
        by_src.setdefault(s, []).append(m)
    comp = {}
    for m1, (_, t1) in mors.items():
        f1, _, a1, y0, g1 = m1
        for m2 in by_src.get(t1, ()):
            f2, x2, a2, _, g2 = m2
            k0 = K.src(a1)
            f = F(k0).comp(F.map(a1)(f2), f1)
            g = G(K.tgt(a2)).comp(g2, G.map(a2)(g1))
            comp[(m2, m1)] = (f, x2, K.comp(a2, a1), y0, g)
    C = TwoSided(objects, mors, ids, comp)
    C.F, C.K, C.G = F, K, G
    C.name = f"C({F.name},{K.name},{G.name})"
    return C


def two_sided_map(beta: NatTrans, gamma: NatTrans, source: TwoSided = None,
                  target: TwoSided = None) -> Functor:
    """``C(beta, K, gamma): C(F, K, G) -> C(F', K, G')``."""
    K = beta.source.index
    source = source or two_sided(beta.source, _plain(K), gamma.source)
    target = target or two_sided(beta.target, _plain(K), gamma.target)
    obj = {(x, k, y): (beta[k].ob(x), k, gamma[k].ob(y)) for (x, k, y) in source.objects}
    mor = {}
    for (f, x1, a, y0, g) in source.morphisms:
        k0, k1 = source.K.morphisms[a]
        mor[(f, x1, a, y0, g)] = (beta[k0](f), beta[k1].ob(x1), a, gamma[k0].ob(y0), gamma[k1](g))
    return Functor(source, target, obj, mor)


def _plain(Kop: FinCat) -> FinCat:
    # ``beta`` lives on K^op; recover K by opposing again (same names)
    K = opposite(Kop)
    if Kop.name.endswith("^op"):
        K.name = Kop.name[:-3]
    return K


def grothendieck(K: FinCat, G: CatDiagram) -> TwoSided:
    """``K \\int G = C(*, K, G)``."""
    return two_sided(point_diagram(opposite(K)), K, G)


def dual_grothendieck(F: CatDiagram, K: FinCat) -> TwoSided:
    """``F \\int K = C(F, K, *)``."""
    return two_sided(F, K, point_diagram(K))


def point_comparison(K: FinCat) -> Functor:
    """The isomorphism ``C(*, K, *) -> K``, ``(*, k, *) -> k``."""
    C = two_sided(point_diagram(opposite(K)), K, point_diagram(K))
    return Functor(C, K, {o: o[1] for o in C.objects}, {m: m[2] for m in C.morphisms})


# ---------------------------------------------------------------------------
# Diagrams on products and the induced diagrams of two-sided categories


def slice_first(D: CatDiagram, A: FinCat, B: FinCat, a) -> CatDiagram:
    """``D(a, -)`` for a diagram ``D`` on ``A x B``."""
    cats = {b: D((a, b)) for b in B.objects}
    funs = {m: D.map((A.ident(a), m)) for m in B.morphisms}
    return CatDiagram(B, cats, funs, name=f"{D.name}({a},-)")


def slice_second(D: CatDiagram, A: FinCat, B: FinCat, b) -> CatDiagram:
    """``D(-, b)`` for a diagram ``D`` on ``A x B``."""
    cats = {a: D((a, b)) for a in A.objects}
    funs = {m: D.map((m, B.ident(b))) for m in A.morphisms}
    return CatDiagram(A, cats, funs, name=f"{D.name}(-,{b})")


def transformation_first(D: CatDiagram, A: FinCat, B: FinCat, m) -> NatTrans:
    """``D(m, -): D(a, -) => D(a', -)`` for ``m: a -> a'`` in ``A``."""
    a0, a1 = A.morphisms[m]
    return NatTrans(slice_first(D, A, B, a0), slice_first(D, A, B, a1),
                    {b: D.map((m, B.ident(b))) for b in B.objects})


def transformation_second(D: CatDiagram, A: FinCat, B: FinCat, m) -> NatTrans:
    """``D(-, m): D(-, b) => D(-, b')`` for ``m: b -> b'`` in ``B``."""
    b0, b1 = B.morphisms[m]
    return NatTrans(slice_second(D, A, B, b0), slice_second(D, A, B, b1),
                    {a: D.map((A.ident(a), m)) for a in A.objects})


def two_sided_right_family(F: CatDiagram, K: FinCat, G: CatDiagram, L: FinCat) -> CatDiagram:
    """``l -> C(F, K, G(-, l))`` on ``L^op`` for ``G`` on ``K x L^op``."""
    Lop = opposite(L)
    cats = {l: two_sided(F, K, slice_second(G, K, Lop, l)) for l in L.objects}
    funs = {}
    idF = identity_transformation(F)
    for lam in L.morphisms:
        l0, l1 = L.morphisms[lam]
        gamma = transformation_second(G, K, Lop, lam)
        funs[lam] = two_sided_map(idF, gamma, cats[l1], cats[l0])
    return CatDiagram(Lop, cats, funs, name=f"C({F.name},K,{G.name})")


def two_sided_left_family(G: CatDiagram, K: FinCat, L: FinCat, H: CatDiagram) -> CatDiagram:
    """``k -> C(G(k, -), L, H)`` on ``K`` for ``G`` on ``K x L^op``."""
    Lop = opposite(L)
    cats = {k: two_sided(slice_first(G, K, Lop, k), L, H) for k in K.objects}
    funs = {}
    idH = identity_transformation(H)
    for a in K.morphisms:
        k0, k1 = K.morphisms[a]
        beta = transformation_first(G, K, Lop, a)
        funs[a] = two_sided_map(beta, idH, cats[k0], cats[k1])
    return CatDiagram(K, cats, funs, name=f"C({G.name},L,{H.name})")


def associativity_map(F: CatDiagram, K: FinCat, G: CatDiagram, L: FinCat, H: CatDiagram
                      ) -> Functor:
    """The canonical functor ``C(C(F,K,G), L, H) -> C(F, K, C(G,L,H))``.

    Both sides consist of the same data ``(f, alpha, g, lambda, h)``; the
    functor regroups it.
    """
    left = two_sided(two_sided_right_family(F, K, G, L), L, H)
    right = two_sided(F, K, two_sided_left_family(G, K, L, H))
    obj = {((x, k, y), l, z): (x, k, (y, l, z)) for ((x, k, y), l, z) in left.objects}
    mor = {}
    for (phi, X1, lam, z0, h) in left.morphisms:
        f, x1, a, y0, g = phi
        l0 = L.src(lam)
        mor[(phi, X1, lam, z0, h)] = (f, x1, a, (y0, l0, z0), (g, X1[2], lam, z0, h))
    return Functor(left, right, obj, mor)


# ---------------------------------------------------------------------------
# The counit and its section


@dataclass
class Counit:
    """``eps(k): C(K(-,k), K, G) -> G(k)`` with section ``s_k`` and ``tau: Id => s_k eps(k)``."""

    source: TwoSided
    eps: Functor
    section: Functor
    tau: Dict

    def section_law(self) -> bool:
        return self.eps.compose(self.section).equals(identity_functor(self.eps.target))

    def tau_is_natural(self) -> bool:
        C = self.source
        se = self.section.compose(self.eps)
        for X in C.objects:
            t = self.tau[X]
            if C.morphisms[t] != (X, se.ob(X)):
                return False
        for m, (X, Y) in C.morphisms.items():
            if C.comp(se(m), self.tau[X]) != C.comp(self.tau[Y], m):
                return False
        return True

    def homology_equivalence(self) -> bool:
        return is_homology_equivalence(nerve_map(self.eps))


def counit(K: FinCat, G: CatDiagram, k) -> Counit:
    F = hom_diagram(K, k)
    C = two_sided(F, K, G)
    Gk = G(k)
    idk = K.ident(k)
    obj = {(b, k0, y): G.map(b).ob(y) for (b, k0, y) in C.objects}
    mor = {m: G.map(m[1])(m[4]) for m in C.morphisms}
    eps = Functor(C, Gk, obj, mor)
    Fk = F(k)
    sec = Functor(Gk, C, {y: (idk, k, y) for y in Gk.objects},
                  {g: (Fk.ident(idk), idk, idk, Gk.src(g), g) for g in Gk.morphisms})
    tau = {}
    for (b, k0, y) in C.objects:
        Fk0 = F(k0)
        Gb = G.map(b)
        tau[(b, k0, y)] = (Fk0.ident(b), idk, b, y, Gk.ident(Gb.ob(y)))
    return Counit(C, eps, sec, tau)


# ---------------------------------------------------------------------------
# Coend compatibility


def coend_of_diagrams(W: CatDiagram, Z: CatDiagram, bound: int = DEFAULT_BOUND) -> CatCoend:
    """``W (x)_I Z`` for ``W`` on ``I^op`` and ``Z`` on ``I``."""
    I = Z.index
    gens = [(a, I.src(a), I.tgt(a)) for a in I.non_identities()]
    return coend_cat(CoendData(list(I.objects), W, Z, W.map, Z.map, gens), bound)


def coend_map(A: CatCoend, B: CatCoend, w_maps: Dict, z_maps: Dict) -> Functor:
    """Functor between coends over one index, induced by levelwise functors."""
    from .nerve import functor_from_generators

    C = A.category
    obj = {}
    for o in C.objects:
        i, w, z = o
        obj[o] = B.object_of(i, w_maps[i].ob(w), z_maps[i].ob(z))
    gen_img = {}
    for e in C.generators:
        tag, i, p, q = e
        if tag == "W":
            gen_img[e] = B.morphism_of(i, w_maps[i](p), B.data.Z(i).ident(z_maps[i].ob(q)))
        else:
            gen_img[e] = B.morphism_of(i, B.data.W(i).ident(w_maps[i].ob(p)), z_maps[i](q))
    return functor_from_generators(C, B.category, obj, gen_img)


def _product_diagram(U: CatDiagram, V: CatDiagram) -> CatDiagram:
    """``(a, b) -> U(a) x V(b)`` on the product of the two indices."""
    P = cat_product(U.index, V.index)
    cats = {(a, b): cat_product(U(a), V(b)) for a, b in P.objects}
    funs = {}
    for (m, n) in P.morphisms:
        (a0, b0), (a1, b1) = P.morphisms[(m, n)]
        Um, Vn = U.map(m), V.map(n)
        src, tgt = cats[(a0, b0)], cats[(a1, b1)]
        funs[(m, n)] = Functor(src, tgt, {(x, y): (Um.ob(x), Vn.ob(y)) for x, y in src.objects},
                               {(f, g): (Um(f), Vn(g)) for f, g in src.morphisms})
    return CatDiagram(P, cats, funs, name=f"{U.name}x{V.name}")


def coend_compat(U: CatDiagram, F: CatDiagram, A: FinCat, K: FinCat, G: CatDiagram, B: FinCat,
                 V: CatDiagram, bound: int = DEFAULT_BOUND):
    """Both sides of ``U (x)_A C(F,K,G) (x)_B V = C(U (x)_A F, K, G (x)_B V)``.

    ``U`` is on ``A^op``, ``F`` on ``A x K^op``, ``G`` on ``K x B^op`` and
    ``V`` on ``B``.  The left side is one coend over ``A x B^op``.
    """
    Kop, Bop = opposite(K), opposite(B)
    # middle: (a, b) -> C(F(a, -), K, G(-, b)) on A x B^op
    AB = cat_product(A, Bop)
    mid_cats = {(a, b): two_sided(slice_first(F, A, Kop, a), K, slice_second(G, K, Bop, b))
                for a, b in AB.objects}
    mid_funs = {}
    for (m, n) in AB.morphisms:
        (a0, b0), (a1, b1) = AB.morphisms[(m, n)]
        beta = transformation_first(F, A, Kop, m)
        gamma = transformation_second(G, K, Bop, n)
        mid_funs[(m, n)] = two_sided_map(beta, gamma, mid_cats[(a0, b0)], mid_cats[(a1, b1)])
    mid = CatDiagram(AB, mid_cats, mid_funs)
    # weights: (a, b) -> U(a) x V(b), contravariant on A x B^op
    UV = _product_diagram(U, CatDiagram(opposite(Bop), V.cats, V.functors))
    left = coend_of_diagrams(UV, mid, bound).category

    # right: C(U (x)_A F(-, k), K, G(k, -) (x)_B V)
    Lcoends = {k: coend_of_diagrams(U, slice_second(F, A, Kop, k), bound) for k in K.objects}
    Rcoends = {k: coend_of_diagrams(slice_first(G, K, Bop, k), V, bound) for k in K.objects}
    Lcats = {k: c.category for k, c in Lcoends.items()}
    Rcats = {k: c.category for k, c in Rcoends.items()}
    Lfun, Rfun = {}, {}
    for a in K.morphisms:
        k0, k1 = K.morphisms[a]
        idU = {x: identity_functor(U(x)) for x in A.objects}
        Lfun[a] = coend_map(Lcoends[k1], Lcoends[k0], idU, {x: F.map((A.ident(x), a)) for x in A.objects})
        idV = {b: identity_functor(V(b)) for b in B.objects}
        Rfun[a] = coend_map(Rcoends[k0], Rcoends[k1], {b: G.map((a, Bop.ident(b))) for b in B.objects}, idV)
    UF = CatDiagram(Kop, Lcats, Lfun, name="U(x)F")
    GV = CatDiagram(K, Rcats, Rfun, name="G(x)V")
    right = two_sided(UF, K, GV)
    return left, right


# ---------------------------------------------------------------------------
# Homotopy invariance


def check_levelwise_equivalence(t: NatTrans):
    for k, f in t.components.items():
        if not is_homology_equivalence(nerve_map(f)):
            raise NotLevelwiseEquivalence(f"component at {k!r} is not a homology equivalence")


def heggie_invariance_check(beta: NatTrans, gamma: NatTrans) -> dict:
    """``C(F,K,G) -> C(F',K,G')`` is a homology equivalence when ``beta`` and ``gamma`` are levelwise."""
    beta.validate()
    gamma.validate()
    check_levelwise_equivalence(beta)
    check_levelwise_equivalence(gamma)
    phi = two_sided_map(beta, gamma)
    hl, hr = homology(nerve(phi.source)), homology(nerve(phi.target))
    ok = hl == hr and is_homology_equivalence(nerve_map(phi))
    return {
        "check": "two-sided homotopy invariance",
        "inputs": {"F": beta.source.name, "G": gamma.source.name, "K": _plain(beta.source.index).name},
        "left": hl.table(),
        "right": hr.table(),
        "verdict": "match" if ok else "mismatch",
        "witness": {"sizes": [list(phi.source.size()), list(phi.target.size())]},
    }


def random_poset_relation(rng: random.Random, n: int, p: float = 0.4) -> List[Tuple[int, int]]:
    """A random strict order on ``0 .. n-1``: ``i < j`` pairs kept with probability ``p``, then closed."""
    rel = {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
    # transitive closure
    changed = True
    while changed:
        changed = False
        for (a, b) in list(rel):
            for (c, d) in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return sorted(rel)


def nested_poset_diagram(K: FinCat, sizes: Dict, relation, contravariant: bool = False,
                         top: bool = False, name: str = "") -> CatDiagram:
    """Diagram of full subposets ``{0..sizes[k]-1}`` of one poset, with inclusions.

    ``K`` must be a poset category with ``sizes`` monotone along its
    morphisms (reversed when ``contravariant``).  With ``top`` an extra
    maximum ``"T"`` is added everywhere, which inclusions preserve.
    """
    rel = set(relation)

    def leq(a, b):
        if b == "T":
            return True
        if a == "T":
            return False
        return a == b or (a, b) in rel

    cats = {}
    for k in K.objects:
        elems = list(range(sizes[k])) + (["T"] if top else [])
        cats[k] = poset(elems, leq)
    funs = {}
    for a in K.morphisms:
        k0, k1 = K.morphisms[a]
        src, tgt = (cats[k1], cats[k0]) if contravariant else (cats[k0], cats[k1])
        funs[a] = Functor(src, tgt, {o: o for o in src.objects}, {m: m for m in src.morphisms})
    return CatDiagram(opposite(K) if contravariant else K, cats, funs, name=name)


def ranked_poset_diagram(K: FinCat, relation, max_size: int = 3, contravariant: bool = False,
                         name: str = "") -> CatDiagram:
    """A :func:`nested_poset_diagram` on any finite poset ``K``.

    The size at ``k`` grows with the number of objects below ``k`` (above it
    when ``contravariant``), capped at ``max_size``.
    """
    def rank(k):
        if contravariant:
            return sum(1 for j in K.objects if K.hom(k, j))
        return sum(1 for j in K.objects if K.hom(j, k))

    levels = sorted({rank(k) for k in K.objects})
    sizes = {k: 1 + min(max_size - 1, levels.index(rank(k))) for k in K.objects}
    return nested_poset_diagram(K, sizes, relation, contravariant=contravariant, name=name)


def collapse_transformation(D: CatDiagram) -> NatTrans:
    """``D => *`` (a weak equivalence when every ``D(k)`` is contractible)."""
    P = point_diagram(D.index)
    comps = {}
    for k in D.index.objects:
        T = P(k)
        t = T.objects[0]
        comps[k] = Functor(D(k), T, {o: t for o in D(k).objects}, {m: T.ident(t) for m in D(k).morphisms})
    return NatTrans(D, P, comps)


def product_projection_transformation(D: CatDiagram, m: int) -> NatTrans:
    """``D x [m] => D``, the projection (a levelwise weak equivalence)."""
    K = D.index
    I = ordinal(m)
    cats = {k: cat_product(D(k), I) for k in K.objects}
    funs = {}
    for a in K.morphisms:
        Da = D.map(a)
        src, tgt = cats[K.src(a)], cats[K.tgt(a)]
        funs[a] = Functor(src, tgt, {(x, i): (Da.ob(x), i) for x, i in src.objects},
                          {(f, u): (Da(f), u) for f, u in src.morphisms})
    DI = CatDiagram(K, cats, funs, name=f"{D.name}x[{m}]")
    comps = {k: Functor(cats[k], D(k), {o: o[0] for o in cats[k].objects},
                        {mm: mm[0] for mm in cats[k].morphisms}) for k in K.objects}
    return NatTrans(DI, D, comps)


def random_heggie_instance(seed: int, K: FinCat, max_size: int = 3):
    """A seeded pair ``(beta, gamma)`` of levelwise weak equivalences over ``K``.

    ``beta: F => *`` collapses nested subposets with a common maximum and
    ``gamma: G x [m] => G`` projects; ``K`` is an ordinal ``[n]``.
    """
    rng = random.Random(seed)
    n = len(K.objects)
    base_f = random_poset_relation(rng, max_size)
    base_g = random_poset_relation(rng, max_size)
    inc = sorted(rng.randint(1, max_size) for _ in range(n))
    Fsizes = {k: s for k, s in zip(sorted(K.objects), reversed(inc))}
    Gsizes = {k: rng.randint(1, max_size) for k in K.objects}
    gs = sorted(Gsizes.values())
    Gsizes = {k: s for k, s in zip(sorted(K.objects), gs)}
    F = nested_poset_diagram(K, Fsizes, base_f, contravariant=True, top=True, name=f"F{seed}")
    G = nested_poset_diagram(K, Gsizes, base_g, name=f"G{seed}")
    beta = collapse_transformation(F)
    gamma = product_projection_transformation(G, rng.randint(1, 2))
    return beta, gamma

"""Coends in Cat and the realizations ``F_D`` of simplicial categories.

A coend ``W (x)_I Z`` of a contravariant and a covariant category-valued
diagram is computed from a presentation: generators are the morphisms of
every ``W(i) x Z(i)`` (one factor at a time), relations are the composition
tables, the interchange law, and the coend identifications along a
generating set of morphisms of ``I``.  The presentation is realized by
congruence closure.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from .category import FinCat, Functor
from .coend import TruncationTooSmall
from .delta import MonotoneMap, codegeneracy, coface
from .homology import homology
from .nerve import InfiniteNerve, nerve
from .presentation import DEFAULT_BOUND, ClosureBoundExceeded, PresentationBuilder, realize_presentation
from .simplicial_cat import CosimplicialCat, SimplicialCat, diag_nerve, realization_functor


@dataclass
class CoendData:
    """Input to :func:`coend_cat`.

    ``W_map(a)`` is a functor ``W(tgt a) -> W(src a)`` and ``Z_map(a)`` a functor
    ``Z(src a) -> Z(tgt a)``; ``generators`` lists triples ``(a, src, tgt)`` of
    index morphisms that generate the index category.
    """

    objects: Sequence[Hashable]
    W: Callable[[Hashable], FinCat]
    Z: Callable[[Hashable], FinCat]
    W_map: Callable[[Hashable], Functor]
    Z_map: Callable[[Hashable], Functor]
    generators: Sequence[Tuple[Hashable, Hashable, Hashable]]


@dataclass
class CatCoend:
    """A coend in Cat with the data needed to map out of it."""

    category: FinCat
    builder: PresentationBuilder
    data: CoendData
    vertex_class: Dict = field(default_factory=dict)

    def object_of(self, i, w, z):
        """Object of the coend represented by ``(i, w, z)``."""
        return self.builder.find((i, w, z))

    def morphism_of(self, i, m, n):
        """Morphism represented by ``(m, n)`` in ``W(i) x Z(i)``."""
        C = self.category
        Wi, Zi = self.data.W(i), self.data.Z(i)
        a, b = Wi.src(m), Wi.tgt(m)
        c = Zi.src(n)
        path = _wpath(Wi, i, m, c) + _zpath(Zi, i, b, n)
        return C.compose_path([C.generators[e] for e in path], self.object_of(i, a, c))


def _wpath(Wi: FinCat, i, m, z):
    return () if Wi.is_identity(m) else (("W", i, m, z),)


def _zpath(Zi: FinCat, i, w, n):
    return () if Zi.is_identity(n) else (("Z", i, w, n),)


def coend_cat(data: CoendData, bound: int = DEFAULT_BOUND) -> CatCoend:
    """The coend ``W (x)_I Z`` in Cat."""
    B = PresentationBuilder()
    for i in data.objects:
        Wi, Zi = data.W(i), data.Z(i)
        for w in Wi.objects:
            for z in Zi.objects:
                B.vertex((i, w, z))
        for m in Wi.non_identities():
            a, b = Wi.morphisms[m]
            for z in Zi.objects:
                B.edge(("W", i, m, z), (i, a, z), (i, b, z))
        for n in Zi.non_identities():
            c, d = Zi.morphisms[n]
            for w in Wi.objects:
                B.edge(("Z", i, w, n), (i, w, c), (i, w, d))
        for g, f in _nonid_pairs(Wi):
            for z in Zi.objects:
                B.relation(_wpath(Wi, i, f, z) + _wpath(Wi, i, g, z), _wpath(Wi, i, Wi.comp(g, f), z),
                           at=(i, Wi.src(f), z))
        for g, f in _nonid_pairs(Zi):
            for w in Wi.objects:
                B.relation(_zpath(Zi, i, w, f) + _zpath(Zi, i, w, g), _zpath(Zi, i, w, Zi.comp(g, f)),
                           at=(i, w, Zi.src(f)))
        for m in Wi.non_identities():
            a, b = Wi.morphisms[m]
            for n in Zi.non_identities():
                c, d = Zi.morphisms[n]
                B.relation((("W", i, m, c), ("Z", i, b, n)), (("Z", i, a, n), ("W", i, m, d)), at=(i, a, c))
    for alpha, i, j in data.generators:
        Wa, Za = data.W_map(alpha), data.Z_map(alpha)
        Wi, Wj, Zi, Zj = data.W(i), data.W(j), data.Z(i), data.Z(j)
        for w in Wj.objects:
            for z in Zi.objects:
                B.identify((i, Wa.ob(w), z), (j, w, Za.ob(z)))
        for m in Wj.non_identities():
            for z in Zi.objects:
                B.relation(_wpath(Wi, i, Wa(m), z), _wpath(Wj, j, m, Za.ob(z)), at=(i, Wa.ob(Wj.src(m)), z))
        for n in Zi.non_identities():
            for w in Wj.objects:
                B.relation(_zpath(Zi, i, Wa.ob(w), n), _zpath(Zj, j, w, Za(n)), at=(i, Wa.ob(w), Zi.src(n)))
    C = realize_presentation(B.build(), bound=bound)
    return CatCoend(C, B, data)


def _nonid_pairs(C: FinCat):
    for g, f in C.composable_pairs():
        if not C.is_identity(g) and not C.is_identity(f):
            yield g, f


def delta_generators(trunc: int) -> List[Tuple[MonotoneMap, int, int]]:
    """Cofaces and codegeneracies of ``Delta_{<=trunc}``."""
    gens = []
    for n in range(1, trunc + 1):
        for i in range(n + 1):
            gens.append((coface(n, i), n - 1, n))
    for n in range(trunc):
        for j in range(n + 1):
            gens.append((codegeneracy(n, j), n + 1, n))
    return gens


def realize(C: SimplicialCat, D: CosimplicialCat, trunc: Optional[int] = None,
            bound: int = DEFAULT_BOUND) -> CatCoend:
    """``F_D(C_*) = C_* (x)_Delta D`` over ``Delta_{<=trunc}``.

    For a ``d``-skeletal ``C_*`` the coend over all of Delta agrees with the
    one over ``Delta_{<=d}``, so ``trunc`` defaults to ``C.dim``.
    """
    trunc = C.dim if trunc is None else trunc
    if trunc < C.dim:
        raise TruncationTooSmall(f"truncation {trunc} is below the skeletal dimension {C.dim}")
    if trunc > D.trunc:
        raise TruncationTooSmall(f"{D.name} is only {D.trunc}-truncated; {trunc} is needed")
    data = CoendData(list(range(trunc + 1)), C.level, D.level, C.map, D.map, delta_generators(trunc))
    return coend_cat(data, bound)


def F(tag: str, C: SimplicialCat, k: int = 1, trunc: Optional[int] = None,
      bound: int = DEFAULT_BOUND) -> FinCat:
    """The realization ``F_D`` for ``D`` one of ``D0 .. D4``."""
    trunc = C.dim if trunc is None else trunc
    return realize(C, realization_functor(tag, trunc, k=k, bound=bound), trunc, bound).category


# ---------------------------------------------------------------------------
# Goodness


def goodness_check(tag: str, C: SimplicialCat, k: int = 1, trunc: Optional[int] = None,
                   bound: int = DEFAULT_BOUND) -> dict:
    """Compare ``H_*(N F_D(C_*))`` with ``H_*(diag N C_*)``.

    ``D`` is good for ``C_*`` when the two agree.  A realization with a
    non-identity cycle has an infinite nerve; the check then reports the
    cycle and a mismatch.
    """
    right = homology(diag_nerve(C))
    witness = {}
    try:
        Fc = F(tag, C, k=k, trunc=trunc, bound=bound)
        witness["realization_size"] = list(Fc.size())
        left = homology(nerve(Fc))
        left_s = left.table()
    except InfiniteNerve as exc:
        left = None
        left_s = "infinite nerve"
        witness["cycle"] = repr(exc.cycle)
    except ClosureBoundExceeded as exc:
        # an infinite realization: its nerve is infinite as well
        left = None
        left_s = "infinite category"
        witness["closure"] = str(exc)
    right_s = right.table()
    verdict = "match" if left is not None and left == right else "mismatch"
    return {
        "check": f"goodness({tag})",
        "inputs": {"C": C.name, "k": k, "trunc": trunc if trunc is not None else C.dim},
        "left": left_s,
        "right": right_s,
        "verdict": verdict,
        "witness": witness,
    }

"""Combinatorics of the simplex category.

Objects are the ordinals ``[n] = {0 < 1 < ... < n}`` for ``n >= 0``; a
morphism ``[n] -> [m]`` is a weakly increasing map, stored as its value
vector.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterator, Tuple


class CompositionMismatch(ValueError):
    """Raised when composing maps whose ordinals do not match."""


@dataclass(frozen=True, order=True)
class MonotoneMap:
    """An order-preserving map ``[src] -> [dst]``."""

    values: Tuple[int, ...]
    dst: int

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise ValueError("the empty ordinal is not an object")
        if any(v < 0 or v > self.dst for v in values):
            raise ValueError(f"values {values} out of range for [{self.dst}]")
        if any(a > b for a, b in zip(values, values[1:])):
            raise ValueError(f"values {values} are not weakly increasing")

    @property
    def src(self) -> int:
        return len(self.values) - 1

    def __call__(self, i: int) -> int:
        return self.values[i]

    def __repr__(self):
        return f"MonotoneMap({self.values}, dst={self.dst})"

    def is_identity(self) -> bool:
        return self.src == self.dst and self.values == tuple(range(self.dst + 1))

    def is_injective(self) -> bool:
        return all(a < b for a, b in zip(self.values, self.values[1:]))

    def is_surjective(self) -> bool:
        return self.values[0] == 0 and self.values[-1] == self.dst and all(
            b - a <= 1 for a, b in zip(self.values, self.values[1:])
        )

    def image(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.values)))


def identity(n: int) -> MonotoneMap:
    return MonotoneMap(tuple(range(n + 1)), n)


def coface(n: int, i: int) -> MonotoneMap:
    """The injection ``[n-1] -> [n]`` that skips ``i``."""
    if not 0 <= i <= n or n < 1:
        raise ValueError(f"no coface d^{i} into [{n}]")
    return MonotoneMap(tuple(j if j < i else j + 1 for j in range(n)), n)


def codegeneracy(n: int, j: int) -> MonotoneMap:
    """The surjection ``[n+1] -> [n]`` that hits ``j`` twice."""
    if not 0 <= j <= n:
        raise ValueError(f"no codegeneracy s^{j} onto [{n}]")
    return MonotoneMap(tuple(i if i <= j else i - 1 for i in range(n + 2)), n)


def compose(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """Return ``f o g`` (apply ``g`` first)."""
    if g.dst != f.src:
        raise CompositionMismatch(f"cannot compose [{f.src}]->[{f.dst}] after [{g.src}]->[{g.dst}]")
    return MonotoneMap(tuple(f.values[v] for v in g.values), f.dst)


@dataclass(frozen=True)
class EZFactorization:
    surjection: MonotoneMap
    injection: MonotoneMap


@lru_cache(maxsize=None)
def ez_factorize(f: MonotoneMap) -> EZFactorization:
    """Unique factorization ``f = injection o surjection``."""
    image = f.image()
    rank = {v: k for k, v in enumerate(image)}
    surj = MonotoneMap(tuple(rank[v] for v in f.values), len(image) - 1)
    inj = MonotoneMap(image, f.dst)
    return EZFactorization(surj, inj)


def ordinal_sum(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """Concatenate ``f`` and ``g``, shifting ``g`` past the image block of ``f``."""
    shift = f.dst + 1
    return MonotoneMap(f.values + tuple(v + shift for v in g.values), f.dst + g.dst + 1)


def reverse(f: MonotoneMap) -> MonotoneMap:
    """Conjugate ``f`` by the order reversal of source and target."""
    n, m = f.src, f.dst
    return MonotoneMap(tuple(m - f.values[n - i] for i in range(n + 1)), m)


def all_maps(n: int, m: int) -> Iterator[MonotoneMap]:
    """All monotone maps ``[n] -> [m]``."""
    for vals in combinations_with_replacement(range(m + 1), n + 1):
        yield MonotoneMap(vals, m)


def injections(k: int, n: int) -> Iterator[MonotoneMap]:
    for vals in combinations(range(n + 1), k + 1):
        yield MonotoneMap(vals, n)


@lru_cache(maxsize=None)
def surjections(n: int, k: int) -> Tuple[MonotoneMap, ...]:
    """All monotone surjections ``[n] -> [k]``, determined by their jump positions."""
    out = []
    for jumps in combinations(range(1, n + 1), k):
        vals, level, js = [], 0, set(jumps)
        for i in range(n + 1):
            if i in js:
                level += 1
            vals.append(level)
        out.append(MonotoneMap(tuple(vals), k))
    return tuple(out)


def degeneracy_indices(s: MonotoneMap) -> Tuple[int, ...]:
    """Positions ``i`` with ``s(i) == s(i+1)``: the codegeneracies ``s`` factors through."""
    return tuple(i for i in range(s.src) if s.values[i] == s.values[i + 1])


def missing_indices(inj: MonotoneMap) -> Tuple[int, ...]:
    hit = set(inj.values)
    return tuple(i for i in range(inj.dst + 1) if i not in hit)

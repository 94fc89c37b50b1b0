"""Built-in test objects: simplicial sets, finite categories, simplicial
categories and the hexagon diagram, plus seeded random directed categories.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Dict, List

from .category import FinCat, cat_product, face_poset, morphism_category, ordinal
from .nerve import nerve
from .presentation import DEFAULT_BOUND, CatPresentation, realize_presentation
from .simplicial_cat import constant_scat, discrete_scat, product_scat
from .sset import boundary, product, simplex_mod_boundary, standard_simplex
from .subdivide import ssd


@dataclass
class CorpusEntry:
    name: str
    kind: str  # "sset", "fincat", "scat" or "diagram"
    obj: Any


def square() -> FinCat:
    """The commutative square ``[1] x [1]``."""
    C = cat_product(ordinal(1), ordinal(1))
    C.name = "square"
    return C


def random_directed_category(seed: int, max_objects: int = 6, bound: int = DEFAULT_BOUND) -> FinCat:
    """A seeded finite directed category from a random acyclic presentation.

    Edges only go from lower to higher vertices, with occasional parallel
    edges, and some pairs of parallel paths of length at most 2 are
    identified.
    """
    rng = random.Random(seed)
    n = rng.randint(1, max_objects)
    edges = {}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                for p in range(1 if rng.random() < 0.8 else 2):
                    edges[("e", i, j, p)] = (i, j)
    P = CatPresentation(list(range(n)), edges)
    paths: Dict = {}
    for e, (a, b) in edges.items():
        paths.setdefault((a, b), []).append((e,))
    for e1, (a, b) in edges.items():
        for e2, (b2, c) in edges.items():
            if b2 == b:
                paths.setdefault((a, c), []).append((e1, e2))
    for (a, b), ps in sorted(paths.items(), key=repr):
        for p, q in zip(ps, ps[1:]):
            if rng.random() < 0.5:
                P.add_relation(p, q)
    C = realize_presentation(P, bound=bound)
    C.name = f"random{seed}"
    return C


def ssets() -> List[CorpusEntry]:
    out = [CorpusEntry(f"Delta^{n}", "sset", standard_simplex(n)) for n in range(5)]
    out += [CorpusEntry(f"boundary Delta^{n}", "sset", boundary(n)[0]) for n in range(1, 4)]
    out += [CorpusEntry(f"Delta^{n}/boundary", "sset", simplex_mod_boundary(n)) for n in range(1, 4)]
    out.append(CorpusEntry("Delta^1 x Delta^1", "sset", product(standard_simplex(1), standard_simplex(1))))
    out.append(CorpusEntry("N[2]", "sset", nerve(ordinal(2))))
    out.append(CorpusEntry("ssd N[2]", "sset", ssd(nerve(ordinal(2)))))
    return out


def categories(n_random: int = 20) -> List[CorpusEntry]:
    out = [CorpusEntry(f"[{n}]", "fincat", ordinal(n)) for n in range(5)]
    out.append(CorpusEntry("F_2", "fincat", face_poset(2)))
    out.append(CorpusEntry("[1]'", "fincat", morphism_category(ordinal(1))))
    out.append(CorpusEntry("[2]'", "fincat", morphism_category(ordinal(2))))
    out.append(CorpusEntry("square", "fincat", square()))
    out += [CorpusEntry(f"random{s}", "fincat", random_directed_category(s)) for s in range(n_random)]
    return out


def simplicial_categories() -> List[CorpusEntry]:
    """Simplicial categories of skeletal dimension at most 2."""
    d = discrete_scat
    entries = [
        ("disc Delta^1", d(standard_simplex(1), "disc Delta^1")),
        ("disc Delta^2", d(standard_simplex(2), "disc Delta^2")),
        ("disc boundary Delta^2", d(boundary(2)[0], "disc boundary Delta^2")),
        ("disc Delta^1/boundary", d(simplex_mod_boundary(1), "disc Delta^1/boundary")),
        ("disc Delta^2/boundary", d(simplex_mod_boundary(2), "disc Delta^2/boundary")),
        ("disc Delta^1 x Delta^1", d(product(standard_simplex(1), standard_simplex(1)), "disc Delta^1 x Delta^1")),
        ("const [1]", constant_scat(ordinal(1), "const [1]")),
        ("const [1]'", constant_scat(morphism_category(ordinal(1)), "const [1]'")),
        ("[1] x disc Delta^1", product_scat(constant_scat(ordinal(1), "[1]"), d(standard_simplex(1), "Delta^1"))),
        ("[1] x disc Delta^2/boundary", product_scat(constant_scat(ordinal(1), "[1]"),
                                                     d(simplex_mod_boundary(2), "Delta^2/boundary"))),
    ]
    return [CorpusEntry(n, "scat", C) for n, C in entries]


def corpus() -> List[CorpusEntry]:
    from .examples import hexagon, hexagon_cone

    out = ssets() + categories() + simplicial_categories()
    out.append(CorpusEntry("hexagon", "diagram", (hexagon(), hexagon_cone())))
    return out

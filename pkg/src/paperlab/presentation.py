"""Finitely presented categories and their realization by congruence closure.

A presentation is a directed graph plus relations between parallel paths.
The quotient of the free category is enumerated Todd-Coxeter style: nodes
are morphisms (paths out of an identity), every node gets every outgoing
edge, every relation is imposed at every node, and coincident nodes are
merged.  The procedure terminates exactly when the presented category is
finite; a path-length bound and a node cap make it total.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Hashable, List, Sequence, Tuple

from .category import FinCat

DEFAULT_BOUND = 64
DEFAULT_MAX_NODES = 400000


class ClosureBoundExceeded(RuntimeError):
    """The congruence closure did not stabilize within the configured bound."""


class InvalidPresentation(ValueError):
    pass


@dataclass(frozen=True)
class Relation:
    lhs: Tuple[Hashable, ...]
    rhs: Tuple[Hashable, ...]
    source: Hashable
    target: Hashable


@dataclass
class CatPresentation:
    """Vertices, edges ``label -> (source, target)`` and relations on paths."""

    vertices: List[Hashable]
    edges: Dict[Hashable, Tuple[Hashable, Hashable]]
    relations: List[Relation] = field(default_factory=list)

    def path_ends(self, path: Sequence[Hashable], start=None):
        if not path:
            return start, start
        a = self.edges[path[0]][0]
        cur = a
        for e in path:
            s, t = self.edges[e]
            if s != cur:
                raise InvalidPresentation(f"path {path} is not composable at {e!r}")
            cur = t
        return a, cur

    def add_relation(self, lhs: Sequence, rhs: Sequence, source=None, target=None):
        """Record ``lhs = rhs``; endpoints are only needed when both sides are empty."""
        lhs, rhs = tuple(lhs), tuple(rhs)
        ends = [self.path_ends(p) for p in (lhs, rhs) if p]
        if not ends:
            return
        if source is None:
            source, target = ends[0]
        if any(e != (source, target) for e in ends):
            raise InvalidPresentation(f"relation {lhs} = {rhs} is not between parallel paths")
        if (not lhs or not rhs) and source != target:
            raise InvalidPresentation(f"identity relation {lhs} = {rhs} between distinct vertices")
        self.relations.append(Relation(lhs, rhs, source, target))

    def validate(self):
        vs = set(self.vertices)
        for e, (a, b) in self.edges.items():
            if a not in vs or b not in vs:
                raise InvalidPresentation(f"edge {e!r} has an endpoint outside the vertices")
        for r in self.relations:
            for p in (r.lhs, r.rhs):
                if p and self.path_ends(p) != (r.source, r.target):
                    raise InvalidPresentation(f"relation path {p} is not parallel")


class PresentationBuilder:
    """Accumulates a presentation where vertices may be identified after the fact."""

    def __init__(self):
        self._parent: Dict = {}
        self._order: List = []
        self._rank: Dict = {}
        self._edges: Dict = {}
        self._rels: List = []

    def vertex(self, v):
        if v not in self._parent:
            self._parent[v] = v
            self._rank[v] = len(self._order)
            self._order.append(v)
        return v

    def find(self, v):
        root = v
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[v] != root:
            self._parent[v], v = root, self._parent[v]
        return root

    def identify(self, a, b):
        self.vertex(a)
        self.vertex(b)
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the earlier vertex as representative for determinism
            if self._rank[ra] < self._rank[rb]:
                self._parent[rb] = ra
            else:
                self._parent[ra] = rb

    def edge(self, label, a, b):
        self.vertex(a)
        self.vertex(b)
        self._edges[label] = (a, b)

    def relation(self, lhs, rhs, at=None):
        """``lhs = rhs`` as paths of edge labels; ``at`` names the vertex for empty paths."""
        self._rels.append((tuple(lhs), tuple(rhs), at))

    def build(self) -> CatPresentation:
        verts = [v for v in self._order if self.find(v) == v]
        edges = {e: (self.find(a), self.find(b)) for e, (a, b) in self._edges.items()}
        P = CatPresentation(verts, edges)
        for lhs, rhs, at in self._rels:
            if lhs == rhs:
                continue
            # endpoints come from the nonempty side; ``at`` only matters for two empty paths
            P.add_relation(lhs, rhs)
        return P


def free_category(vertices, edges) -> CatPresentation:
    return CatPresentation(list(vertices), dict(edges))


def realize_presentation(P: CatPresentation, bound: int = DEFAULT_BOUND,
                         max_nodes: int = DEFAULT_MAX_NODES) -> FinCat:
    """The category presented by ``P``, if finite with short normal forms.

    Morphisms of the result are keyed ``(source, word)`` where ``word`` is the
    shortlex-least path (tuple of edge labels) representing the morphism; the
    identity of ``a`` is ``(a, ())``.  The result's ``generators`` attribute
    maps each edge label to its morphism.

    Raises :class:`ClosureBoundExceeded` if enumeration needs paths longer than
    ``bound`` plus the longest relation, or more than ``max_nodes`` nodes.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    edge_order = {e: i for i, e in enumerate(P.edges)}
    out_edges: Dict = {v: [] for v in P.vertices}
    for e, (a, b) in P.edges.items():
        out_edges[a].append(e)
    rels_at: Dict = {v: [] for v in P.vertices}
    for r in P.relations:
        rels_at[r.source].append(r)
    max_rel = max((max(len(r.lhs), len(r.rhs)) for r in P.relations), default=0)
    depth_cap = bound + max_rel

    parent: List[int] = []
    cod: List = []
    root: List = []
    depth: List[int] = []
    table: List[Dict] = []

    def new_node(r, c, dp):
        if len(parent) >= max_nodes:
            raise ClosureBoundExceeded(f"more than {max_nodes} nodes enumerated")
        if dp > depth_cap:
            raise ClosureBoundExceeded(f"paths longer than {depth_cap} needed")
        parent.append(len(parent))
        cod.append(c)
        root.append(r)
        depth.append(dp)
        table.append({})
        return len(parent) - 1

    def find(n):
        r = n
        while parent[r] != r:
            r = parent[r]
        while parent[n] != r:
            parent[n], n = r, parent[n]
        return r

    def step(n, e):
        n = find(n)
        t = table[n].get(e)
        if t is None:
            t = new_node(root[n], P.edges[e][1], depth[n] + 1)
            table[n][e] = t
            return t
        return find(t)

    def trace(n, path):
        for e in path:
            n = step(n, e)
        return n

    def coincide(a, b):
        queue = deque([(a, b)])
        while queue:
            x, y = queue.popleft()
            x, y = find(x), find(y)
            if x == y:
                continue
            if y < x:
                x, y = y, x
            parent[y] = x
            depth[x] = min(depth[x], depth[y])
            for e, t in table[y].items():
                s = table[x].get(e)
                if s is None:
                    table[x][e] = t
                else:
                    queue.append((s, t))
            table[y] = {}

    starts = {v: new_node(v, v, 0) for v in P.vertices}
    i = 0
    while i < len(parent):
        n = i
        i += 1
        if find(n) != n:
            continue
        for r in rels_at[cod[n]]:
            a = trace(n, r.lhs)
            b = trace(n, r.rhs)
            coincide(a, b)
            if find(n) != n:
                break
        n = find(n)
        for e in out_edges[cod[n]]:
            step(n, e)

    # canonical words by breadth-first search in edge order
    word: Dict[int, Tuple] = {}
    for v in P.vertices:
        s = find(starts[v])
        word[s] = (v, ())
        queue = deque([s])
        while queue:
            n = queue.popleft()
            for e in sorted(table[n], key=edge_order.get):
                t = find(table[n][e])
                if t not in word:
                    word[t] = (v, word[n][1] + (e,))
                    queue.append(t)
    longest = max((len(w[1]) for w in word.values()), default=0)
    if longest > bound:
        raise ClosureBoundExceeded(f"normal forms of length {longest} exceed the bound {bound}")

    morphisms = {w: (w[0], cod[n]) for n, w in word.items()}
    identities = {v: word[find(starts[v])] for v in P.vertices}
    by_root: Dict = {v: [] for v in P.vertices}
    for w in word.values():
        by_root[w[0]].append(w)
    comp = {}
    for n, w in word.items():
        for w2 in by_root[cod[n]]:
            comp[(w2, w)] = word[trace(n, w2[1])]
    gens = {e: word[step(starts[a], e)] for e, (a, _) in P.edges.items()}
    return FinCat(P.vertices, morphisms, identities, comp, generators=gens)

"""Value types: hypergraphs, graphs (2-uniform hypergraphs), and digraphs.

All structures are immutable after construction and canonicalized on entry:
vertex labels are positive integers stored in ascending order, every edge is
stored as an ascending tuple, and edge families are deduplicated and ordered
lexicographically.  Equality compares the vertex set as well as the edge
family, so a graph with an isolated vertex differs from the same graph
without it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

Edge = tuple[int, ...]
Arc = tuple[int, int]


class InvalidInput(ValueError):
    """Base class for malformed structures and violated preconditions."""


class InvalidVertexLabel(InvalidInput):
    pass


class DuplicateVertexLabel(InvalidInput):
    pass


class EdgeTooSmall(InvalidInput):
    pass


class EdgeOutsideVertexSet(InvalidInput):
    pass


class EdgeNotPair(InvalidInput):
    pass


class VertexSetMismatch(InvalidInput):
    pass


class UnknownVertex(InvalidInput):
    pass


class SelfArc(InvalidInput):
    pass


class ArcOutsideVertexSet(InvalidInput):
    pass


def _checked_vertices(vertices: Iterable[int]) -> tuple[int, ...]:
    vs = list(vertices)
    for v in vs:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise InvalidVertexLabel(f"vertex labels must be positive integers, got {v!r}")
    if len(set(vs)) != len(vs):
        raise DuplicateVertexLabel(f"duplicate vertex labels in {vs!r}")
    return tuple(sorted(vs))


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """A finite vertex set plus a duplicate-free family of vertex subsets.

    Edges have cardinality >= 2 (no loops, no multiple edges); isolated
    vertices are allowed and significant.
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        vs = _checked_vertices(self.vertices)
        vset = set(vs)
        family = set()
        for raw in self.edges:
            e = frozenset(raw)
            if not e <= vset:
                raise EdgeOutsideVertexSet(f"edge {sorted(e)} not within vertex set")
            if len(e) < 2:
                raise EdgeTooSmall(f"edge {sorted(e)} has fewer than 2 vertices")
            family.add(tuple(sorted(e)))
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", tuple(sorted(family)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def edge_sets(self) -> list[frozenset[int]]:
        return [frozenset(e) for e in self.edges]

    def __repr__(self) -> str:
        es = ",".join("{" + ",".join(map(str, e)) + "}" for e in self.edges)
        return f"Hypergraph(V={list(self.vertices)}, E=[{es}])"


class Graph(Hypergraph):
    """A hypergraph whose every edge is a pair."""

    def __post_init__(self) -> None:
        super().__post_init__()
        for e in self.edges:
            if len(e) != 2:
                raise EdgeNotPair(f"graph edge {e} is not a pair")


@dataclass(frozen=True, eq=False)
class Digraph:
    """A finite vertex set plus a set of loop-free ordered arcs."""

    vertices: tuple[int, ...]
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        vs = _checked_vertices(self.vertices)
        vset = set(vs)
        arcset = set()
        for u, v in self.arcs:
            if u == v:
                raise SelfArc(f"self-arc at vertex {u}")
            if u not in vset or v not in vset:
                raise ArcOutsideVertexSet(f"arc ({u},{v}) not within vertex set")
            arcset.add((u, v))
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "arcs", tuple(sorted(arcset)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.vertices == other.vertices and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.vertices, self.arcs))

    def in_neighbors(self, v: int) -> frozenset[int]:
        if v not in self.vertices:
            raise UnknownVertex(f"vertex {v} not in digraph")
        return frozenset(u for u, w in self.arcs if w == v)

    def out_neighbors(self, v: int) -> frozenset[int]:
        if v not in self.vertices:
            raise UnknownVertex(f"vertex {v} not in digraph")
        return frozenset(w for u, w in self.arcs if u == v)


def make_hypergraph(vertices: Iterable[int], edges: Iterable[Iterable[int]]) -> Hypergraph:
    return Hypergraph(tuple(vertices), tuple(tuple(e) for e in edges))


def make_graph(vertices: Iterable[int], edges: Iterable[Iterable[int]]) -> Graph:
    return Graph(tuple(vertices), tuple(tuple(e) for e in edges))


def make_digraph(vertices: Iterable[int], arcs: Iterable[tuple[int, int]]) -> Digraph:
    return Digraph(tuple(vertices), tuple((u, v) for u, v in arcs))


def as_graph(h: Hypergraph) -> Graph:
    """View a 2-uniform hypergraph as a Graph; raises EdgeNotPair otherwise."""
    return Graph(h.vertices, h.edges)


def hypergraph_equal(a: Hypergraph, b: Hypergraph) -> bool:
    """True iff vertex sets and edge families coincide as sets."""
    return a == b


def hypergraph_union(a: Hypergraph, b: Hypergraph) -> Hypergraph:
    """Union of two edge families over one common vertex set."""
    if a.vertices != b.vertices:
        raise VertexSetMismatch("union requires identical vertex sets")
    return Hypergraph(a.vertices, a.edges + b.edges)


def is_linear(h: Hypergraph) -> bool:
    """True iff any two distinct edges share at most one vertex."""
    sets = h.edge_sets()
    return all(len(a & b) <= 1 for a, b in combinations(sets, 2))


def is_k_uniform(h: Hypergraph, k: int) -> bool:
    return all(len(e) == k for e in h.edges)


def degree(h: Hypergraph, v: int) -> int:
    """Number of edges incident to v."""
    if v not in h.vertices:
        raise UnknownVertex(f"vertex {v} not in hypergraph")
    return sum(1 for e in h.edges if v in e)


def max_edge_cardinality(h: Hypergraph) -> int:
    return max((len(e) for e in h.edges), default=0)


def relabel(h: Hypergraph, mapping: dict[int, int]) -> Hypergraph:
    """Apply a vertex bijection; preserves the Graph subtype."""
    cls = Graph if isinstance(h, Graph) else Hypergraph
    return cls(
        tuple(mapping[v] for v in h.vertices),
        tuple(tuple(mapping[v] for v in e) for e in h.edges),
    )


def adjacency(g: Graph) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in g.vertices}
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj

"""The edge intersection operator, its iteration, and the intersection depth.

``ei(h)`` keeps the vertex set of ``h`` and takes as edges all pairwise
intersections of distinct edges that still have at least two vertices.  Every
edge of ``ei(h)`` is strictly smaller than the largest edge of ``h``, so
repeated application always reaches an edgeless hypergraph; ``ei_number``
counts how many steps that takes.

The operator deliberately follows the set-builder definition: an intersection
that happens to coincide with an input edge stays in the result (e.g. the
family {123, 1234} maps to {123}).
"""

from __future__ import annotations

from itertools import combinations

from .core import (
    Hypergraph,
    InvalidInput,
    is_linear,
    max_edge_cardinality,
)


class NotLinear(InvalidInput):
    pass


class FullVertexSetAlreadyEdge(InvalidInput):
    pass


class TooFewVertices(InvalidInput):
    pass


def ei(h: Hypergraph) -> Hypergraph:
    """Pairwise intersections of distinct edges, restricted to size >= 2."""
    sets = h.edge_sets()
    family = {a & b for a, b in combinations(sets, 2) if len(a & b) >= 2}
    return Hypergraph(h.vertices, tuple(tuple(e) for e in family))


def ei_iterate(h: Hypergraph, k: int) -> Hypergraph:
    """k-fold application of ``ei``; k = 0 returns h unchanged."""
    if k < 0:
        raise InvalidInput("iteration count must be nonnegative")
    for _ in range(k):
        h = ei(h)
    return h


def ei_number(h: Hypergraph) -> int:
    """Smallest k such that the k-th iterate is edgeless."""
    bound = max_edge_cardinality(h)
    k = 0
    while h.edges:
        h = ei(h)
        k += 1
        # max edge cardinality drops strictly per step, so k < bound always
        assert k < bound or not h.edges
    return k


def satisfies_necessary_condition(h: Hypergraph) -> bool:
    """Check the covering condition every edge intersection hypergraph obeys.

    Whenever two incomparable edges e1, e2 overlap in >= 2 vertices, some
    third edge must contain e1 & e2.  Hypergraphs violating this (minimal
    example: {123, 234}) are not the image of ``ei``.
    """
    sets = h.edge_sets()
    for a, b in combinations(sets, 2):
        cap = a & b
        if len(cap) < 2 or a <= b or b <= a:
            continue
        if not any(cap <= c for c in sets if c != a and c != b):
            return False
    return True


def augment_linear(h: Hypergraph) -> Hypergraph:
    """Add the full vertex set as an edge of a linear hypergraph.

    For linear h with V not an edge, the result h' satisfies ei(h') == h:
    distinct original edges meet in <= 1 vertex, and each original edge is
    recovered as its intersection with the new full edge.
    """
    if not is_linear(h):
        raise NotLinear("input must be linear (pairwise overlaps <= 1 vertex)")
    if len(h.vertices) < 2:
        raise TooFewVertices("need at least 2 vertices to add the full edge")
    if h.vertices in h.edges:
        raise FullVertexSetAlreadyEdge("full vertex set is already an edge")
    out = Hypergraph(h.vertices, h.edges + (h.vertices,))
    assert ei(out) == h
    return out

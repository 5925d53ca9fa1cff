"""Helly property testing.

A hypergraph has the Helly property when every pairwise-intersecting
subfamily of edges has a common vertex.  ``is_helly`` uses the classical
polynomial test over vertex triples; ``is_helly_bruteforce`` enumerates all
subfamilies and is the definitional oracle the fast path is validated
against.  The property is hereditary under the edge intersection operator.
"""

from __future__ import annotations

import random
from itertools import combinations

from .core import Hypergraph, InvalidInput, make_hypergraph


class TooManyEdges(InvalidInput):
    pass


def is_helly(h: Hypergraph) -> bool:
    """Triple test: edges meeting >= 2 of any three vertices must share one.

    Any two such edges already intersect (pigeonhole on the triple), so the
    definition forces a common vertex; conversely a pairwise-intersecting
    subfamily with empty intersection always shows up on some triple.
    """
    sets = h.edge_sets()
    for trip in combinations(h.vertices, 3):
        tset = frozenset(trip)
        members = [e for e in sets if len(e & tset) >= 2]
        if members and not frozenset.intersection(*members):
            return False
    return True


def is_helly_bruteforce(h: Hypergraph) -> bool:
    """Definitional check over all 2^m subfamilies; m <= 20."""
    sets = h.edge_sets()
    m = len(sets)
    if m > 20:
        raise TooManyEdges(f"brute force limited to 20 edges, got {m}")
    meets = []
    for i in range(m):
        mask = 1 << i
        for j in range(m):
            if i != j and sets[i] & sets[j]:
                mask |= 1 << j
        meets.append(mask)
    for sub in range(1, 1 << m):
        members = [i for i in range(m) if sub >> i & 1]
        if len(members) < 2:
            continue
        if all(meets[i] & sub == sub for i in members):
            if not frozenset.intersection(*(sets[i] for i in members)):
                return False
    return True


def random_helly_hypergraph(
    rng: random.Random, max_vertices: int = 9, max_edges: int = 8
) -> Hypergraph:
    """Rejection-sample a Helly hypergraph, oracle-verified.

    Draws one or two kernel vertices and builds each edge around a kernel, so
    most draws are Helly without every edge sharing a single vertex; draws
    that still violate the property are rejected.
    """
    while True:
        n = rng.randint(3, max_vertices)
        verts = list(range(1, n + 1))
        kernels = rng.sample(verts, rng.randint(1, 2))
        edges = []
        for _ in range(rng.randint(1, max_edges)):
            k = rng.choice(kernels)
            size = rng.randint(2, min(n, 4))
            rest = [v for v in verts if v != k]
            edges.append([k] + rng.sample(rest, size - 1))
        h = make_hypergraph(verts, edges)
        if is_helly_bruteforce(h):
            return h

"""Neighborhood-derived hypergraphs of a digraph and their exchange identity.

Five derived hypergraphs on the digraph's vertex set, each keeping only edges
of cardinality >= 2:

  competition         in-neighborhoods N^-(v)
  common_enemy        out-neighborhoods N^+(v)
  double_competition  intersections N^+(v1) & N^-(v2)
  niche               in- or out-neighborhoods
  in_out_coincidence  sets that are simultaneously some N^-(v1) and some N^+(v2)

All five share one code path so that both sides of the exchange identity

  ei(niche) | in_out_coincidence == double_competition | ei(competition) | ei(common_enemy)

are built from the same ingredients.  The identity holds for every digraph;
``check_niche_identity`` evaluates both sides and reports agreement.
"""

from __future__ import annotations

from .core import Digraph, Hypergraph, InvalidInput, hypergraph_union
from .ei import ei
from .laws import LawReport

KINDS = (
    "competition",
    "common_enemy",
    "double_competition",
    "niche",
    "in_out_coincidence",
)


def neighborhood_hypergraph(d: Digraph, kind: str) -> Hypergraph:
    ins = {v: d.in_neighbors(v) for v in d.vertices}
    outs = {v: d.out_neighbors(v) for v in d.vertices}
    if kind == "competition":
        family = set(ins.values())
    elif kind == "common_enemy":
        family = set(outs.values())
    elif kind == "double_competition":
        family = {outs[v1] & ins[v2] for v1 in d.vertices for v2 in d.vertices}
    elif kind == "niche":
        family = set(ins.values()) | set(outs.values())
    elif kind == "in_out_coincidence":
        family = {e for e in ins.values() if e in set(outs.values())}
    else:
        raise InvalidInput(f"unknown kind {kind!r}; expected one of {KINDS}")
    return Hypergraph(d.vertices, tuple(tuple(e) for e in family if len(e) >= 2))


def check_niche_identity(d: Digraph) -> LawReport:
    """Evaluate both sides of the exchange identity on one digraph."""
    lhs = hypergraph_union(
        ei(neighborhood_hypergraph(d, "niche")),
        neighborhood_hypergraph(d, "in_out_coincidence"),
    )
    rhs = hypergraph_union(
        hypergraph_union(
            neighborhood_hypergraph(d, "double_competition"),
            ei(neighborhood_hypergraph(d, "competition")),
        ),
        ei(neighborhood_hypergraph(d, "common_enemy")),
    )
    params = {"vertices": len(d.vertices), "arcs": len(d.arcs)}
    return LawReport("niche-identity", params, lhs, rhs)

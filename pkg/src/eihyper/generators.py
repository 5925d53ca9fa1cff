"""Constructors for the named structure families and the small-tree catalog.

Families: strong d-uniform hypercycles and hyperpaths (consecutive d-windows
of vertices on a cycle/path), complete d-uniform hypergraphs, and the
2-uniform paths, cycles, and stars.  Vertex labels follow the window index:
vertex i is the integer i; stars put the center at 1 and leaves at 2..n+1.

The catalog maps the 48 trees on at most 8 vertices, numbered 1..48 in order
of vertex count, to explicit labeled edge sets and, where one exists, to a
3-uniform hypergraph whose edge intersections reproduce the tree exactly.
Ids 15, 25, 26 and 48 are paths/stars whose exact position in the numbering
is not determined by our sources of record, so the catalog rejects them;
those shapes are reachable through FamilySpec instead.  Seven trees (P2, P3,
P4, P5, P6 and the catalog trees 7 and 12) have no 3-uniform realization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations

from .core import Graph, Hypergraph, InvalidInput, as_graph, make_graph, make_hypergraph
from .ei import ei
from .fileio import FileFormatError, parse_hypergraph

FAMILIES = ("hypercycle", "hyperpath", "complete_uniform", "path", "cycle", "star")

# ids of the seven trees without a 3-uniform realization
EXCEPTION_IDS: dict[int, str] = {2: "P2", 3: "P3", 5: "P4", 7: "T7", 8: "P5", 12: "T12", 14: "P6"}
# ids forced to be stars K_{1,m}: realized by the cyclic star construction
_STAR_SIZE_BY_ID = {4: 3, 6: 4, 9: 5}
# path/star ids the numbering leaves open (P7/K_{1,6} and P8/K_{1,7})
UNDETERMINED_IDS = frozenset({15, 25, 26, 48})


class InvalidSpec(InvalidInput):
    pass


class UnknownCatalogId(InvalidInput):
    pass


class NotInCatalog(InvalidInput):
    pass


class KnownUnrealizable(Exception):
    """The requested tree has no 3-uniform hypergraph realizing it."""

    def __init__(self, identity: str, catalog_id: int):
        super().__init__(
            f"{identity} (catalog id {catalog_id}) is not the edge intersection "
            "hypergraph of any 3-uniform hypergraph"
        )
        self.identity = identity
        self.catalog_id = catalog_id


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    d: int | None = None


def hypercycle(n: int, d: int) -> Hypergraph:
    """n windows {v_i, ..., v_{i+d-1}} with indices taken modulo n."""
    if not 2 <= d <= n:
        raise InvalidSpec(f"hypercycle requires 2 <= d <= n, got n={n}, d={d}")
    edges = [[(i + j) % n + 1 for j in range(d)] for i in range(n)]
    return make_hypergraph(range(1, n + 1), edges)


def hyperpath(n: int, d: int) -> Hypergraph:
    """n-d+1 windows {v_i, ..., v_{i+d-1}} along a path."""
    if not 2 <= d <= n:
        raise InvalidSpec(f"hyperpath requires 2 <= d <= n, got n={n}, d={d}")
    edges = [range(i, i + d) for i in range(1, n - d + 2)]
    return make_hypergraph(range(1, n + 1), edges)


def complete_uniform(n: int, d: int) -> Hypergraph:
    """All d-subsets of an n-set."""
    if not 2 <= d <= n:
        raise InvalidSpec(f"complete_uniform requires 2 <= d <= n, got n={n}, d={d}")
    return make_hypergraph(range(1, n + 1), combinations(range(1, n + 1), d))


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidSpec(f"path requires n >= 1, got {n}")
    return make_graph(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidSpec(f"cycle requires n >= 3, got {n}")
    return make_graph(range(1, n + 1), [(i, i % n + 1) for i in range(1, n + 1)])


def star(n: int) -> Graph:
    """K_{1,n}: center 1, leaves 2..n+1."""
    if n < 1:
        raise InvalidSpec(f"star requires n >= 1 leaves, got {n}")
    return make_graph(range(1, n + 2), [(1, leaf) for leaf in range(2, n + 2)])


def generate(spec: FamilySpec) -> Hypergraph:
    if spec.family in ("hypercycle", "hyperpath", "complete_uniform"):
        if spec.d is None:
            raise InvalidSpec(f"{spec.family} requires a uniformity d")
        maker = {
            "hypercycle": hypercycle,
            "hyperpath": hyperpath,
            "complete_uniform": complete_uniform,
        }[spec.family]
        return maker(spec.n, spec.d)
    if spec.family in ("path", "cycle", "star"):
        if spec.d is not None:
            raise InvalidSpec(f"{spec.family} takes no uniformity parameter")
        return {"path": path, "cycle": cycle, "star": star}[spec.family](spec.n)
    raise InvalidSpec(f"unknown family {spec.family!r}")


def star_realization(n: int) -> Hypergraph:
    """Cyclic triple cover of K_{1,n}: {1, l, l'} over consecutive leaves.

    Consecutive triples meet in {center, leaf}; non-consecutive ones only in
    the center.  Needs n >= 3 so that the leaf cycle has length >= 3.
    """
    if n < 3:
        raise InvalidSpec(f"star realization requires n >= 3 leaves, got {n}")
    leaves = list(range(2, n + 2))
    triples = [(1, leaves[i], leaves[(i + 1) % n]) for i in range(n)]
    out = make_hypergraph(range(1, n + 2), triples)
    assert ei(out) == star(n)
    return out


def path_realization(n: int) -> Hypergraph:
    """Triple chain realizing P_n for n = 1 or n >= 7.

    The chain {i, i+1, i+2} generates every inner edge; {1, 2, n-2} and
    {3, n-1, n} regenerate the two boundary edges without touching anything
    else once n >= 7.
    """
    if n != 1 and n < 7:
        raise InvalidSpec(f"path realization exists only for n = 1 or n >= 7, got {n}")
    if n == 1:
        return make_hypergraph([1], [])
    triples = [(i, i + 1, i + 2) for i in range(1, n - 1)]
    triples += [(1, 2, n - 2), (3, n - 1, n)]
    out = make_hypergraph(range(1, n + 1), triples)
    assert ei(out) == path(n)
    return out


@lru_cache(maxsize=1)
def _load_catalog() -> tuple[dict[int, Graph], dict[int, Hypergraph]]:
    text = resources.files("eihyper").joinpath("data/tree_catalog.txt").read_text()
    trees: dict[int, Graph] = {}
    realizations: dict[int, Hypergraph] = {}
    for block in text.split("\n\n"):
        lines = [ln for ln in block.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines:
            continue
        head = lines[0].split()
        body = "\n".join(lines[1:])
        kind, cid = head[0], int(head[1])
        if kind == "tree":
            trees[cid] = as_graph(parse_hypergraph(body))
        elif kind == "realization":
            realizations[cid] = parse_hypergraph(body)
        else:
            raise FileFormatError(f"unrecognized catalog block header: {lines[0]!r}")
    for cid, witness in realizations.items():
        assert ei(witness) == trees[cid], f"catalog realization {cid} failed verification"
    return trees, realizations


def catalog_ids() -> tuple[int, ...]:
    """Ids whose tree shape the catalog determines."""
    trees, _ = _load_catalog()
    return tuple(sorted(trees))


def realizable_catalog_ids() -> tuple[int, ...]:
    """Ids with an explicit stored realization."""
    _, realizations = _load_catalog()
    return tuple(sorted(realizations))


def catalog_tree(catalog_id: int) -> Graph:
    trees, _ = _load_catalog()
    if catalog_id in UNDETERMINED_IDS:
        raise UnknownCatalogId(
            f"catalog id {catalog_id} is a path or star whose exact numbering is "
            "not determined; use FamilySpec for paths and stars"
        )
    if catalog_id not in trees:
        raise UnknownCatalogId(f"catalog id {catalog_id} has no recorded shape")
    return trees[catalog_id]


def catalog_realization(catalog_id: int) -> Hypergraph:
    trees, realizations = _load_catalog()
    if catalog_id in EXCEPTION_IDS:
        raise KnownUnrealizable(EXCEPTION_IDS[catalog_id], catalog_id)
    if catalog_id in realizations:
        return realizations[catalog_id]
    if catalog_id == 1:
        return make_hypergraph([1], [])
    if catalog_id in _STAR_SIZE_BY_ID:
        return star_realization(_STAR_SIZE_BY_ID[catalog_id])
    if catalog_id in UNDETERMINED_IDS:
        raise UnknownCatalogId(
            f"catalog id {catalog_id} is a path or star whose exact numbering is "
            "not determined; use path_realization/star_realization instead"
        )
    raise NotInCatalog(f"no realization recorded for catalog id {catalog_id}")

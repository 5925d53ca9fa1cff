"""Closed-form predictions for iterated edge intersections of named families.

Each law predicts either the full k-th iterate or the intersection depth of a
family and is verified by recomputing the same quantity with the operator
itself.  Laws carry explicit validity ranges; parameters outside them raise
OutOfLawRange rather than extrapolating (small hypercycles with n < 2d-1, for
instance, develop extra edge types the closed forms do not cover).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import Hypergraph, InvalidInput, hypergraph_union
from .ei import ei, ei_iterate, ei_number
from .generators import complete_uniform, cycle, hypercycle, hyperpath

LAW_IDS = (
    "hypercycle-iterate",
    "hypercycle-depth",
    "hyperpath-depth",
    "complete-iterate",
    "complete-depth",
    "cycle-from-triples",
)


class OutOfLawRange(InvalidInput):
    pass


@dataclass(frozen=True)
class LawReport:
    law_id: str
    params: Mapping[str, int]
    predicted: Hypergraph | int
    computed: Hypergraph | int

    @property
    def agrees(self) -> bool:
        return self.predicted == self.computed

    def line(self) -> str:
        ps = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.law_id} {ps} agrees={'true' if self.agrees else 'false'}"


def truncation_floor(n: int, d: int, k: int) -> int:
    """Smallest edge cardinality in the k-th iterate of the complete family."""
    return max(2, 2**k * (d - n) + n)


def _union_of(parts: list[Hypergraph]) -> Hypergraph:
    out = parts[0]
    for p in parts[1:]:
        out = hypergraph_union(out, p)
    return out


def predicted_ei_iter(family: str, n: int, d: int, k: int) -> Hypergraph:
    """Predicted k-th iterate for the hypercycle and complete families."""
    if family == "hypercycle":
        if not (d >= 3 and n >= 2 * d - 1 and 1 <= k <= d - 2):
            raise OutOfLawRange(
                f"hypercycle iterate law needs d >= 3, n >= 2d-1, 1 <= k <= d-2; "
                f"got n={n}, d={d}, k={k}"
            )
        return _union_of([hypercycle(n, c) for c in range(d - k, 1, -1)])
    if family == "complete":
        if not (n - 1 >= d >= 3 and 1 <= k <= d - 2):
            raise OutOfLawRange(
                f"complete iterate law needs n-1 >= d >= 3, 1 <= k <= d-2; "
                f"got n={n}, d={d}, k={k}"
            )
        floor = truncation_floor(n, d, k)
        return _union_of([complete_uniform(n, c) for c in range(d - k, floor - 1, -1)])
    raise OutOfLawRange(f"no iterate law for family {family!r}")


def predicted_ei_number(family: str, n: int, d: int) -> int:
    """Predicted intersection depth for hypercycles, hyperpaths, completes."""
    if family == "hypercycle":
        if not (d >= 2 and n >= 2 * d - 1):
            raise OutOfLawRange(f"hypercycle depth law needs d >= 2, n >= 2d-1; got n={n}, d={d}")
        return d - 1
    if family == "hyperpath":
        if not (2 <= d <= n):
            raise OutOfLawRange(f"hyperpath depth law needs 2 <= d <= n; got n={n}, d={d}")
        return d - 1 if n >= 2 * d - 1 else n - d + 1
    if family == "complete":
        if not (d >= 2 and n >= d + 1):
            raise OutOfLawRange(f"complete depth law needs d >= 2, n >= d+1; got n={n}, d={d}")
        return d - 1
    raise OutOfLawRange(f"no depth law for family {family!r}")


_LAW_PARAMS = {
    "hypercycle-iterate": ("n", "d", "k"),
    "hypercycle-depth": ("n", "d"),
    "hyperpath-depth": ("n", "d"),
    "complete-iterate": ("n", "d", "k"),
    "complete-depth": ("n", "d"),
    "cycle-from-triples": ("n",),
}


def verify_law(law_id: str, **params: int) -> LawReport:
    """Compare a law's prediction against the recomputed value."""
    if law_id not in _LAW_PARAMS:
        raise OutOfLawRange(f"unknown law id {law_id!r}")
    missing = [p for p in _LAW_PARAMS[law_id] if params.get(p) is None]
    if missing:
        raise OutOfLawRange(f"{law_id} requires parameters {missing}")
    n, d, k = params.get("n"), params.get("d"), params.get("k")
    if law_id == "hypercycle-iterate":
        predicted: Hypergraph | int = predicted_ei_iter("hypercycle", n, d, k)
        computed: Hypergraph | int = ei_iterate(hypercycle(n, d), k)
    elif law_id == "hypercycle-depth":
        predicted = predicted_ei_number("hypercycle", n, d)
        computed = ei_number(hypercycle(n, d))
    elif law_id == "hyperpath-depth":
        predicted = predicted_ei_number("hyperpath", n, d)
        computed = ei_number(hyperpath(n, d))
    elif law_id == "complete-iterate":
        predicted = predicted_ei_iter("complete", n, d, k)
        computed = ei_iterate(complete_uniform(n, d), k)
    elif law_id == "complete-depth":
        predicted = predicted_ei_number("complete", n, d)
        computed = ei_number(complete_uniform(n, d))
    else:
        if n < 5:
            raise OutOfLawRange(f"cycle-from-triples needs n >= 5; got n={n}")
        predicted = cycle(n)
        computed = ei(hypercycle(n, 3))
    used = {p: params[p] for p in _LAW_PARAMS[law_id]}
    return LawReport(law_id, used, predicted, computed)


def default_sweep() -> list[LawReport]:
    """Every law over its standard desk-scale parameter grid."""
    reports = []
    for d in (3, 4, 5):
        for n in range(2 * d - 1, 13):
            for k in range(1, d - 1):
                reports.append(verify_law("hypercycle-iterate", n=n, d=d, k=k))
            reports.append(verify_law("hypercycle-depth", n=n, d=d))
    for d in range(2, 7):
        for n in range(d + 1, 15):
            reports.append(verify_law("hyperpath-depth", n=n, d=d))
    for d in range(3, 7):
        for n in range(d + 1, 10):
            for k in range(1, d - 1):
                reports.append(verify_law("complete-iterate", n=n, d=d, k=k))
            reports.append(verify_law("complete-depth", n=n, d=d))
    for n in range(5, 31):
        reports.append(verify_law("cycle-from-triples", n=n))
    return reports

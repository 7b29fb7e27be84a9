"""Maximum Simultaneous Acyclic Subgraph via parity over graphic matroids.

Each color class contributes its graphic matroid; fake copies go to a free
matroid (identity block), so they never constrain a selection. q edges form
a simultaneous forest exactly when their copies are independent.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .ecg import EdgeColoredGraph, color_subgraph, components, simultaneous_forest_check
from .ffield import DEFAULT_PRIME, PrimeField
from .matroids import direct_sum, free, graphic
from .parity import ParityInstance, solve_parity
from .simfes_solver import CopyLabel, copies


@dataclass
class MaxSimVerdict:
    answer: bool
    witness: frozenset[int] | None = None

    def __bool__(self) -> bool:
        return self.answer


def forest_upper_bound(G: EdgeColoredGraph) -> int:
    """sum_i (n - components(G_i)), never less than a simultaneous forest's size."""
    total = 0
    for i in range(1, G.alpha + 1):
        H = color_subgraph(G, i)
        total += H.n - components(H)
    return total


def build_maxsim_instance(G: EdgeColoredGraph, q: int, field_: PrimeField) -> ParityInstance:
    parts = []
    for i in range(1, G.alpha + 1):
        H = color_subgraph(G, i)
        parts.append(graphic(H, field_, [CopyLabel(e, i, "original") for e in H.edge_ids()]))
    fakes = [lab for e in G.edge_ids() for lab in copies(G, e) if lab.kind == "fake"]
    parts.append(free(fakes, field_))
    return ParityInstance(direct_sum(parts), tuple(copies(G, e) for e in G.edge_ids()), q)


def solve_maxsim(G: EdgeColoredGraph, q: int, prime: int = DEFAULT_PRIME) -> MaxSimVerdict:
    if q < 0:
        raise ValueError("q must be non-negative")
    if q == 0:
        return MaxSimVerdict(True, frozenset())
    if q > G.m or q > forest_upper_bound(G):
        return MaxSimVerdict(False)
    inst = build_maxsim_instance(G, q, PrimeField(prime))
    ids = solve_parity(inst)
    if ids is None:
        return MaxSimVerdict(False)
    F = frozenset(b + 1 for b in ids)
    if not simultaneous_forest_check(G, F):
        raise AssertionError("parity witness is not a simultaneous forest")
    return MaxSimVerdict(True, F)


def max_simultaneous_forest(G: EdgeColoredGraph, prime: int = DEFAULT_PRIME) -> tuple[int, frozenset[int]]:
    """Binary search on q; feasibility is monotone since subsets of forests are forests."""
    lo, hi = 0, min(G.m, forest_upper_bound(G))
    best = frozenset()
    while lo < hi:
        mid = (lo + hi + 1) // 2
        v = solve_maxsim(G, mid, prime)
        if v:
            lo, best = mid, v.witness
        else:
            hi = mid - 1
    return lo, best


def brute_maxsim(G: EdgeColoredGraph, q: int) -> MaxSimVerdict:
    for F in combinations(G.edge_ids(), q):
        if simultaneous_forest_check(G, F):
            return MaxSimVerdict(True, frozenset(F))
    return MaxSimVerdict(False)

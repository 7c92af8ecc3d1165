"""Exact disjoint scramble number by search over connected vertex partitions.

A disjoint scramble of order >= t can be grown into a partition of V(G)
into exactly t connected blocks whose pairwise minimum edge cuts are all
>= t: uncovered vertices are absorbed into an adjacent egg and adjacent
eggs merged, and neither move lowers any pairwise cut.  Conversely such a
partition is a disjoint scramble of order t.  So dsn(G) >= t is decided by
searching those partitions only.
"""
from __future__ import annotations

from math import isqrt

from ..budget import Budget, unlimited
from ..errors import FeasibilityCapExceeded
from ..flow import min_edge_cut
from ..graph import MultiGraph
from ..params import connected_masks, edge_connectivity
from ..scramble import Scramble

DSN_CAP_N = 14


class _PartitionSearch:
    def __init__(self, G: MultiGraph, budget: Budget):
        self.G = G
        self.budget = budget
        by_low: dict[int, list[int]] = {v: [] for v in range(G.n)}
        for m in connected_masks(G, cap_n=max(G.n, 1)):
            by_low[(m & -m).bit_length() - 1].append(m)
        self.by_low = by_low
        self.cut_cache: dict[tuple[int, int], bool] = {}

    def cut_at_least(self, a: int, b: int, t: int) -> bool:
        # the cache is reset whenever t changes
        key = (a, b) if a < b else (b, a)
        if key not in self.cut_cache:
            self.cut_cache[key] = min_edge_cut(self.G, a, b, limit=t)[0] >= t
        return self.cut_cache[key]

    def decide(self, t: int) -> list[int] | None:
        G = self.G
        if t == 1:
            return [G.full_mask]
        if t > G.n:
            return None
        self.cut_cache = {}

        def go(blocks: list[int], rest: int) -> list[int] | None:
            left = t - len(blocks)
            if left == 0:
                return blocks if rest == 0 else None
            self.budget.tick()
            if bin(rest).count("1") < left or len(G.components(rest)) > left:
                return None
            if left == 1:
                cands = [rest] if G.is_connected_mask(rest) else []
            else:
                low = (rest & -rest).bit_length() - 1
                cands = [m for m in self.by_low[low] if m & rest == m and m != rest]
            for m in cands:
                if G.boundary(m) < t:
                    continue
                if all(self.cut_at_least(m, b, t) for b in blocks):
                    found = go(blocks + [m], rest & ~m)
                    if found is not None:
                        return found
            return None

        return go([], G.full_mask)


def dsn_exact(G: MultiGraph, cap: int = DSN_CAP_N, budget: Budget | None = None) -> tuple[int, Scramble]:
    """Largest order of a disjoint scramble, with a witness partition."""
    if G.n > cap:
        raise FeasibilityCapExceeded(f"dsn search capped at n={cap}, got {G.n}")
    budget = budget or unlimited("dsn")
    search = _PartitionSearch(G, budget)
    # verteggs give min(n, lambda); each block needs boundary >= t, so t^2 <= 2|E|
    lam = edge_connectivity(G) if G.n > 1 else 0
    best_t = max(1, min(G.n, lam))
    best = search.decide(best_t) if best_t > 1 else [G.full_mask]
    limit = min(G.n, isqrt(2 * G.num_edges))
    t = best_t + 1
    while t <= limit:
        found = search.decide(t)
        if found is None:
            break
        best_t, best = t, found
        t += 1
    return best_t, Scramble(G, best)


def dsn_growth_bound(n: int, d: int) -> int:
    """Integer value of max over k in [1, n] of min(k, d*n/k)."""
    return max(min(k, (d * n) // k) for k in range(1, max(n, 1) + 1))

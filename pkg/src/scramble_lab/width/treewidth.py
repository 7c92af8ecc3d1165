"""Exact treewidth by search over elimination orderings.

Treewidth ignores edge multiplicity, so every routine works on neighbour
bitmasks of the underlying simple graph.
"""
from __future__ import annotations

from ..bits import iter_bits
from ..budget import Budget, unlimited
from ..errors import FeasibilityCapExceeded
from ..graph import MultiGraph

TREEWIDTH_CAP_N = 18


def _q_set(adj: list[int], eliminated: int, v: int) -> int:
    """Vertices outside ``eliminated`` + v that v reaches through eliminated vertices."""
    seen = 1 << v
    frontier = 1 << v
    out = 0
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        nxt &= ~seen
        seen |= nxt
        out |= nxt & ~eliminated
        frontier = nxt & eliminated
    return out & ~(1 << v)


def _min_fill_order(adj: list[int]) -> tuple[int, list[int]]:
    adj = list(adj)
    alive = (1 << len(adj)) - 1
    width = 0
    order = []
    while alive:
        best = None
        for v in iter_bits(alive):
            nb = adj[v] & alive
            fill = 0
            for u in iter_bits(nb):
                fill += bin(nb & ~adj[u] & ~(1 << u)).count("1")
            key = (fill, bin(nb).count("1"), v)
            if best is None or key < best:
                best = key
        v = best[2]
        nb = adj[v] & alive
        width = max(width, bin(nb).count("1"))
        for u in iter_bits(nb):
            adj[u] |= nb & ~(1 << u)
        alive &= ~(1 << v)
        order.append(v)
    return width, order


def _degeneracy(adj: list[int]) -> int:
    alive = (1 << len(adj)) - 1
    best = 0
    while alive:
        v = min(iter_bits(alive), key=lambda x: (bin(adj[x] & alive).count("1"), x))
        best = max(best, bin(adj[v] & alive).count("1"))
        alive &= ~(1 << v)
    return best


def _decide(adj: list[int], k: int, budget: Budget) -> list[int] | None:
    """An elimination order of width <= k, or None."""
    n = len(adj)
    full = (1 << n) - 1
    dead: set[int] = set()

    def go(elim: int) -> list[int] | None:
        rest = full & ~elim
        if bin(rest).count("1") <= k + 1:
            return list(iter_bits(rest))
        if elim in dead:
            return None
        budget.tick()
        cands = []
        for v in iter_bits(rest):
            q = _q_set(adj, elim, v)
            size = bin(q).count("1")
            if size <= k:
                cands.append((size, v, q))
        cands.sort()
        for _, v, _ in cands:
            tail = go(elim | (1 << v))
            if tail is not None:
                return [v] + tail
        dead.add(elim)
        return None

    return go(0)


def elimination_width(G: MultiGraph, order: list[int]) -> int:
    adj = list(G.adj)
    elim = 0
    width = 0
    for v in order:
        width = max(width, bin(_q_set(adj, elim, v)).count("1"))
        elim |= 1 << v
    return width


def treewidth_exact(G: MultiGraph, cap: int = TREEWIDTH_CAP_N, budget: Budget | None = None,
                    with_order: bool = False):
    """Exact treewidth; optionally also an optimal elimination ordering."""
    if G.n > cap:
        raise FeasibilityCapExceeded(f"treewidth search capped at n={cap}, got {G.n}")
    budget = budget or unlimited("treewidth")
    adj = list(G.adj)
    if G.n == 1:
        return (0, [0]) if with_order else 0
    ub, order = _min_fill_order(adj)
    lb = max(1, _degeneracy(adj))
    for k in range(lb, ub):
        found = _decide(adj, k, budget)
        if found is not None:
            return (k, found) if with_order else k
    return (ub, order) if with_order else ub

"""Integer max-flow (shortest augmenting paths) with an optional early stop.

Capacities are nested dicts ``cap[u][v]``. Callers that only need to know
whether the flow reaches some threshold pass ``limit`` and the search stops
as soon as the value reaches it.
"""
from __future__ import annotations

from collections import deque

from .bits import iter_bits
from .graph import MultiGraph

INF = float("inf")


def max_flow(cap: dict, sources: set, sinks: set, limit: float = INF) -> tuple[int, set]:
    """Return ``(value, source_side)``.

    ``source_side`` is the residual-reachable set from ``sources`` and is a
    minimum cut only when the value is below ``limit``.
    """
    res: dict = {u: dict(nb) for u, nb in cap.items()}
    for u, nb in cap.items():
        for v in nb:
            res.setdefault(v, {}).setdefault(u, 0)
    value = 0
    while value < limit:
        parent = {s: None for s in sources}
        q = deque(sources)
        hit = None
        while q and hit is None:
            u = q.popleft()
            for v, c in res[u].items():
                if c > 0 and v not in parent:
                    parent[v] = u
                    if v in sinks:
                        hit = v
                        break
                    q.append(v)
        if hit is None:
            return value, set(parent)
        path = []
        v = hit
        while parent[v] is not None:
            path.append((parent[v], v))
            v = parent[v]
        push = min(res[a][b] for a, b in path)
        if push == INF:
            return INF, set()
        push = min(push, limit - value)
        for a, b in path:
            res[a][b] -= push
            res[b][a] += push
        value += push
    return value, set()


def edge_capacities(G: MultiGraph) -> dict:
    return {v: dict(G.neighbors(v)) for v in range(G.n)}


def min_edge_cut(G: MultiGraph, a: int, b: int, limit: float = INF) -> tuple[int, int]:
    """Minimum number of edges separating vertex sets ``a`` and ``b`` (masks).

    Returns ``(value, side_mask)`` with ``side_mask`` the source side of a
    minimum cut (meaningful only when ``value < limit``).
    """
    if a & b:
        return INF, 0
    cap = edge_capacities(G)
    value, side = max_flow(cap, set(iter_bits(a)), set(iter_bits(b)), limit)
    m = 0
    for v in side:
        m |= 1 << v
    return value, m


def local_vertex_connectivity(G: MultiGraph, s: int, t: int) -> int:
    """Internally vertex-disjoint ``s``-``t`` paths; ``s`` and ``t`` non-adjacent."""
    cap: dict = {}
    for v in range(G.n):
        inner = INF if v in (s, t) else 1
        cap.setdefault(2 * v, {})[2 * v + 1] = inner
        cap.setdefault(2 * v + 1, {})
    for u, v, _ in G.edges():
        cap[2 * u + 1][2 * v] = INF
        cap[2 * v + 1][2 * u] = INF
    value, _ = max_flow(cap, {2 * s + 1}, {2 * t})
    return value

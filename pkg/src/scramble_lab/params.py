"""Structural parameters: connectivity, girth, restricted cuts, alpha_k, xi_k."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from collections import deque

from .bits import mask_of
from .errors import BadParams, FeasibilityCapExceeded, InfeasibleSize
from .flow import local_vertex_connectivity, min_edge_cut
from .graph import MultiGraph

SUBSET_CAP_N = 20
ENUM_CAP = 500_000


@dataclass(frozen=True)
class GraphParams:
    min_degree: int
    max_degree: int
    girth: float
    vertex_connectivity: int
    edge_connectivity: int


def edge_connectivity(G: MultiGraph) -> int:
    if G.n < 2:
        raise BadParams("edge connectivity needs n >= 2")
    best = G.min_degree
    for t in range(1, G.n):
        val, _ = min_edge_cut(G, 1, 1 << t, limit=best)
        best = min(best, val)
    return best


def vertex_connectivity(G: MultiGraph) -> int:
    if G.n < 2:
        raise BadParams("vertex connectivity needs n >= 2")
    best = G.n - 1
    for s in range(G.n):
        for t in range(s + 1, G.n):
            if (G.adj[s] >> t) & 1:
                continue
            best = min(best, local_vertex_connectivity(G, s, t))
    return best


def girth(G: MultiGraph) -> float:
    """Length of a shortest cycle; parallel edges form 2-cycles; ``inf`` if acyclic."""
    if any(m > 1 for _, _, m in G.edges()):
        return 2
    best = math.inf
    for s in range(G.n):
        dist = [-1] * G.n
        parent = [-1] * G.n
        dist[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for u in G.neighbors(v):
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    q.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def connectivity_params(G: MultiGraph) -> GraphParams:
    return GraphParams(
        min_degree=G.min_degree,
        max_degree=G.max_degree,
        girth=girth(G),
        vertex_connectivity=vertex_connectivity(G),
        edge_connectivity=edge_connectivity(G),
    )


def _check_subset_cap(G: MultiGraph, cap: int) -> None:
    if G.n > cap:
        raise FeasibilityCapExceeded(f"subset search on n={G.n} exceeds cap {cap}")


def lambda_k(G: MultiGraph, k: int, cap: int = SUBSET_CAP_N) -> int | None:
    """Minimum edge cut leaving every component with at least ``k`` vertices.

    ``None`` when no such cut exists. Enumerates sides ``A`` containing
    vertex 0; a minimum restricted cut is always the boundary of such a side.
    """
    if k < 1:
        raise BadParams("k must be >= 1")
    if 2 * k > G.n:
        raise InfeasibleSize(f"lambda_{k} undefined for n={G.n}")
    _check_subset_cap(G, cap)
    full = G.full_mask
    best = None
    for sub in range(1 << (G.n - 1)):
        a = 1 | (sub << 1)
        if a == full:
            continue
        b = full & ~a
        if a.bit_count() < k or b.bit_count() < k:
            continue
        if any(c.bit_count() < k for c in G.components(a)):
            continue
        if any(c.bit_count() < k for c in G.components(b)):
            continue
        val = G.boundary(a)
        if best is None or val < best:
            best = val
    return best


def alpha_k_witness(G: MultiGraph, k: int, cap: int = SUBSET_CAP_N) -> tuple[int, int]:
    """Largest vertex set whose induced components all have at most ``k`` vertices, as ``(size, mask)``."""
    if k < 1:
        raise BadParams("k must be >= 1")
    _check_subset_cap(G, cap)
    n = G.n
    if k >= n:
        return n, G.full_mask
    best = [0, 0]

    def comp_size(chosen: int, v: int) -> int:
        return G.reach(1 << v, chosen | (1 << v)).bit_count()

    # include/exclude in vertex order; every component stays <= k
    def go(v: int, chosen: int, size: int) -> None:
        if size + (n - v) <= best[0]:
            return
        if v == n:
            best[0], best[1] = size, chosen
            return
        if comp_size(chosen, v) <= k:
            go(v + 1, chosen | (1 << v), size + 1)
        go(v + 1, chosen, size)

    go(0, 0, 0)
    return best[0], best[1]


def alpha_k(G: MultiGraph, k: int, cap: int = SUBSET_CAP_N) -> int:
    return alpha_k_witness(G, k, cap)[0]


def enumerate_connected_subgraphs(G: MultiGraph, k: int, cap: int = ENUM_CAP) -> list[tuple[int, ...]]:
    """All ``k``-vertex sets inducing connected subgraphs, as sorted tuples in lex order."""
    if k < 1 or k > G.n:
        raise BadParams(f"k={k} outside 1..{G.n}")
    if math.comb(G.n, k) > cap:
        raise FeasibilityCapExceeded(f"C({G.n},{k}) exceeds enumeration cap {cap}")
    return [c for c in combinations(range(G.n), k) if G.is_connected_mask(mask_of(c))]


def connected_masks(G: MultiGraph, cap_n: int = 16) -> list[int]:
    """Every nonempty connected vertex set as a bitmask, ascending."""
    _check_subset_cap(G, cap_n)
    return [m for m in range(1, 1 << G.n) if G.is_connected_mask(m)]


def xi_k(G: MultiGraph, k: int, cap: int = ENUM_CAP) -> int:
    """Minimum edge boundary (with multiplicity) over connected ``k``-vertex sets."""
    sets = enumerate_connected_subgraphs(G, k, cap)
    return min(G.boundary(mask_of(s)) for s in sets)


def independence_number(G: MultiGraph) -> int:
    return alpha_k(G, 1)

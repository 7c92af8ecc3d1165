"""Loopless connected multigraphs on vertices ``0..n-1`` and basic operations."""
from __future__ import annotations

from collections import deque
from typing import Iterable

from .bits import iter_bits
from .errors import (
    BadIndex,
    Disconnected,
    NeighborsNotDistinct,
    NoSuchEdge,
    NotDegreeTwo,
    SelfLoop,
)


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class MultiGraph:
    """Immutable connected loopless multigraph.

    Edges are kept as a map from sorted vertex pairs to multiplicities.
    ``family`` is an optional generator tag such as ``("cycle", 6)``; it
    travels with the object but takes no part in equality.
    """

    __slots__ = ("n", "_mult", "_nbrs", "adj", "family", "_edges")

    def __init__(self, n: int, mult: dict[tuple[int, int], int], family: tuple | None = None):
        if n < 1:
            raise BadIndex(f"vertex count must be >= 1, got {n}")
        clean: dict[tuple[int, int], int] = {}
        for (u, v), m in mult.items():
            if not (0 <= u < n and 0 <= v < n):
                raise BadIndex(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if int(m) != m or m < 1:
                raise BadIndex(f"multiplicity of ({u},{v}) must be a positive integer, got {m}")
            k = _key(u, v)
            clean[k] = clean.get(k, 0) + int(m)
        self.n = n
        self._mult = clean
        nbrs: list[dict[int, int]] = [dict() for _ in range(n)]
        adj = [0] * n
        for (u, v), m in clean.items():
            nbrs[u][v] = m
            nbrs[v][u] = m
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._nbrs = nbrs
        self.adj = adj
        self.family = family
        self._edges = tuple(sorted((u, v, m) for (u, v), m in clean.items()))
        if not self.is_connected_mask((1 << n) - 1):
            raise Disconnected(f"graph on {n} vertices is not connected")

    # -- basic queries -------------------------------------------------
    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """Sorted ``(u, v, multiplicity)`` triples with ``u < v``."""
        return self._edges

    def edge_copies(self) -> list[tuple[int, int]]:
        """Edges with each parallel copy listed separately, sorted."""
        return [(u, v) for u, v, m in self._edges for _ in range(m)]

    @property
    def num_edges(self) -> int:
        return sum(m for _, _, m in self._edges)

    def multiplicity(self, u: int, v: int) -> int:
        return self._mult.get(_key(u, v), 0)

    def neighbors(self, v: int) -> dict[int, int]:
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return sum(self._nbrs[v].values())

    @property
    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def is_simple(self) -> bool:
        return all(m == 1 for _, _, m in self._edges)

    def simple(self) -> "MultiGraph":
        return MultiGraph(self.n, {(u, v): 1 for u, v, _ in self._edges})

    # -- vertex-set helpers ------------------------------------------------
    def boundary(self, mask: int) -> int:
        """Number of edges (with multiplicity) leaving the vertex set ``mask``."""
        total = 0
        for v in iter_bits(mask):
            for u, m in self._nbrs[v].items():
                if not (mask >> u) & 1:
                    total += m
        return total

    def edges_between(self, a: int, b: int) -> int:
        total = 0
        for v in iter_bits(a):
            for u, m in self._nbrs[v].items():
                if (b >> u) & 1:
                    total += m
        return total

    def reach(self, start: int, within: int) -> int:
        """Vertices of ``within`` reachable from the set ``start`` inside ``within``."""
        seen = start & within
        frontier = seen
        adj = self.adj
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            nxt &= within & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def is_connected_mask(self, mask: int) -> bool:
        if mask == 0:
            return False
        return self.reach(mask & -mask, mask) == mask

    def components(self, mask: int) -> list[int]:
        comps = []
        rest = mask
        while rest:
            c = self.reach(rest & -rest, rest)
            comps.append(c)
            rest &= ~c
        return comps

    def is_connected_set(self, vertices: Iterable[int]) -> bool:
        m = 0
        for v in vertices:
            if not 0 <= v < self.n:
                raise BadIndex(f"vertex {v} out of range")
            m |= 1 << v
        return self.is_connected_mask(m)

    def distances_from(self, s: int) -> list[int]:
        dist = [-1] * self.n
        dist[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for u in self._nbrs[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    q.append(u)
        return dist

    # -- dunder ------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        tag = f", family={self.family!r}" if self.family else ""
        return f"MultiGraph(n={self.n}, edges={list(self._edges)}{tag})"

    def with_family(self, family: tuple | None) -> "MultiGraph":
        g = MultiGraph.__new__(MultiGraph)
        for slot in MultiGraph.__slots__:
            setattr(g, slot, getattr(self, slot))
        g.family = family
        return g


def build_graph(n: int, edges: Iterable, family: tuple | None = None) -> MultiGraph:
    """Build a validated multigraph from ``(u, v)`` or ``(u, v, m)`` items.

    Repeated pairs accumulate multiplicity.
    """
    mult: dict[tuple[int, int], int] = {}
    for e in edges:
        if len(e) == 2:
            u, v = e
            m = 1
        elif len(e) == 3:
            u, v, m = e
        else:
            raise BadIndex(f"edge spec {e!r} must have 2 or 3 entries")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise BadIndex(f"edge ({u},{v}) out of range for n={n}")
        k = _key(u, v)
        mult[k] = mult.get(k, 0) + m
    return MultiGraph(n, mult, family)


def subdivide_edge(G: MultiGraph, u: int, w: int) -> MultiGraph:
    """Replace one copy of edge ``uw`` by the path ``u - n - w``."""
    if G.multiplicity(u, w) == 0:
        raise NoSuchEdge(f"no edge ({u},{w})")
    mult = dict(G._mult)
    k = _key(u, w)
    mult[k] -= 1
    if mult[k] == 0:
        del mult[k]
    v = G.n
    mult[(u, v)] = 1
    mult[(w, v)] = 1
    return MultiGraph(G.n + 1, mult)


def smooth_vertex(G: MultiGraph, v: int) -> MultiGraph:
    """Remove degree-2 vertex ``v`` with distinct neighbours ``s, w`` and join ``s w``.

    Vertices above ``v`` shift down by one.
    """
    if not 0 <= v < G.n:
        raise BadIndex(f"vertex {v} out of range")
    if G.degree(v) != 2:
        raise NotDegreeTwo(f"vertex {v} has degree {G.degree(v)}")
    nb = G.neighbors(v)
    if len(nb) != 2:
        raise NeighborsNotDistinct(f"vertex {v} has a doubled edge to {next(iter(nb))}")
    s, w = sorted(nb)

    def relabel(x: int) -> int:
        return x - 1 if x > v else x

    mult: dict[tuple[int, int], int] = {}
    for (a, b), m in G._mult.items():
        if v in (a, b):
            continue
        k = _key(relabel(a), relabel(b))
        mult[k] = mult.get(k, 0) + m
    k = _key(relabel(s), relabel(w))
    mult[k] = mult.get(k, 0) + 1
    return MultiGraph(G.n - 1, mult)


def cartesian_product(G: MultiGraph, H: MultiGraph, family: tuple | None = None) -> MultiGraph:
    """``G □ H`` with vertex ``(g, h)`` numbered ``g * H.n + h``.

    Untagged products are tagged ``("product", G.n, H.n)``.
    """
    nh = H.n
    mult: dict[tuple[int, int], int] = {}
    for g in range(G.n):
        for a, b, m in H.edges():
            mult[(g * nh + a, g * nh + b)] = m
    for h in range(nh):
        for a, b, m in G.edges():
            mult[(a * nh + h, b * nh + h)] = m
    return MultiGraph(G.n * nh, mult, family or ("product", G.n, nh))


def line_graph(G: MultiGraph) -> MultiGraph:
    """Line graph; each parallel copy becomes its own vertex (in ``edge_copies`` order)."""
    copies = G.edge_copies()
    m = len(copies)
    if m == 0:
        raise Disconnected("line graph of an edgeless graph is empty")
    mult = {}
    for i in range(m):
        a = set(copies[i])
        for j in range(i + 1, m):
            if a & set(copies[j]):
                mult[(i, j)] = 1
    return MultiGraph(m, mult)


def remove_edge_copy(G: MultiGraph, u: int, v: int) -> tuple[list[int], list[int], MultiGraph | None, MultiGraph | None]:
    """Delete one copy of ``uv``; if that disconnects ``G`` return both sides.

    Returns ``(side_u, side_v, G_u, G_v)`` where the sides are sorted original
    vertex lists and the graphs are relabelled to ``0..k-1`` in that order.
    When ``G`` stays connected the graphs are ``None``.
    """
    if G.multiplicity(u, v) == 0:
        raise NoSuchEdge(f"no edge ({u},{v})")
    if G.multiplicity(u, v) > 1:
        return [], [], None, None
    mask = G.full_mask
    adj = list(G.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    seen = 1 << u
    frontier = seen
    while frontier:
        nxt = 0
        for x in iter_bits(frontier):
            nxt |= adj[x]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    if (seen >> v) & 1:
        return [], [], None, None
    side_u = list(iter_bits(seen))
    side_v = list(iter_bits(mask & ~seen))
    return side_u, side_v, induced_subgraph(G, side_u), induced_subgraph(G, side_v)


def induced_subgraph(G: MultiGraph, vertices: Iterable[int]) -> MultiGraph:
    order = sorted(vertices)
    index = {v: i for i, v in enumerate(order)}
    mult = {}
    for a, b, m in G.edges():
        if a in index and b in index:
            mult[(index[a], index[b])] = m
    return MultiGraph(len(order), mult)


def relabel(G: MultiGraph, perm: list[int]) -> MultiGraph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return MultiGraph(G.n, {(perm[a], perm[b]): m for a, b, m in G.edges()})


__all__ = [
    "MultiGraph",
    "build_graph",
    "subdivide_edge",
    "smooth_vertex",
    "cartesian_product",
    "line_graph",
    "induced_subgraph",
    "remove_edge_copy",
    "relabel",
]

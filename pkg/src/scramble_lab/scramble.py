"""Scrambles: validation, hitting and egg-cut numbers, order, and reductions."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .bits import bits, iter_bits, mask_of
from .budget import Budget
from .errors import (
    BadParams,
    BadVertex,
    DisconnectedEgg,
    EmptyCollection,
    EmptyEgg,
    OrderTooSmall,
    PreconditionViolated,
)
from .flow import INF, min_edge_cut
from .graph import MultiGraph, smooth_vertex, subdivide_edge
from .hitting import min_hitting_set, minimal_sets
from .params import enumerate_connected_subgraphs


def _canon(mask: int) -> tuple[int, tuple[int, ...]]:
    return (mask.bit_count(), bits(mask))


class Scramble:
    """A set of connected vertex sets (eggs) on a host graph.

    Eggs are stored as bitmasks in canonical order: by size, then by the
    sorted vertex tuple. Duplicates are dropped.
    """

    __slots__ = ("host", "masks", "_report")

    def __init__(self, host: MultiGraph, masks: Iterable[int]):
        self.host = host
        self.masks = tuple(sorted(set(masks), key=_canon))
        self._report = None

    @property
    def eggs(self) -> list[tuple[int, ...]]:
        return [bits(m) for m in self.masks]

    def __len__(self) -> int:
        return len(self.masks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Scramble):
            return NotImplemented
        return self.host == other.host and self.masks == other.masks

    def __hash__(self) -> int:
        return hash((self.host, self.masks))

    def __repr__(self) -> str:
        return f"Scramble(n={self.host.n}, eggs={self.eggs})"


def make_scramble(G: MultiGraph, egg_sets: Iterable[Iterable[int]]) -> Scramble:
    masks = []
    for egg in egg_sets:
        egg = list(egg)
        if not egg:
            raise EmptyEgg("eggs must be nonempty")
        for v in egg:
            if not 0 <= v < G.n:
                raise BadVertex(f"egg vertex {v} out of range for n={G.n}")
        m = mask_of(egg)
        if not G.is_connected_mask(m):
            raise DisconnectedEgg(f"egg {sorted(set(egg))} does not induce a connected subgraph")
        masks.append(m)
    if not masks:
        raise EmptyCollection("a scramble needs at least one egg")
    return Scramble(G, masks)


def vertegg_scramble(G: MultiGraph) -> Scramble:
    return Scramble(G, [1 << v for v in range(G.n)])


def uniform_scramble(G: MultiGraph, k: int, cap: int | None = None) -> Scramble:
    """The k-uniform scramble: every connected k-vertex set is an egg."""
    sets = enumerate_connected_subgraphs(G, k) if cap is None else enumerate_connected_subgraphs(G, k, cap)
    return Scramble(G, [mask_of(s) for s in sets])


@dataclass
class OrderReport:
    hitting: int
    egg_cut: float
    order: int
    witness_hitting_set: tuple[int, ...]
    witness_cut: list[tuple[int, int]] | None = field(default=None)

    def to_json(self) -> dict:
        return {
            "hitting": self.hitting,
            "egg_cut": "inf" if self.egg_cut == INF else self.egg_cut,
            "order": self.order,
            "hitting_witness": list(self.witness_hitting_set),
            "cut_witness": None if self.witness_cut is None else [list(e) for e in self.witness_cut],
        }


def hitting_number(S: Scramble, budget: Budget | None = None) -> tuple[int, tuple[int, ...]]:
    size, mask = min_hitting_set(S.masks, budget)
    return size, bits(mask)


def is_disjoint(S: Scramble) -> bool:
    seen = 0
    for m in S.masks:
        if seen & m:
            return False
        seen |= m
    return True


def _cut_edges(G: MultiGraph, side: int) -> list[tuple[int, int]]:
    out = []
    for u, v, m in G.edges():
        if ((side >> u) & 1) != ((side >> v) & 1):
            out.extend([(u, v)] * m)
    return out


def egg_cut_value(G: MultiGraph, masks, limit: float = INF) -> tuple[float, int]:
    """Minimum over vertex-disjoint egg pairs of the pairwise minimum edge cut.

    Returns ``(value, side_mask)``; value is ``inf`` when all eggs pairwise
    meet. Flows stop early once they reach the best value found so far, or
    ``limit`` when the caller only needs to know whether the value is below it.
    """
    best = limit
    best_side = 0
    masks = list(masks)
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if a & b:
                continue
            val, side = min_edge_cut(G, a, b, limit=best)
            if val < best:
                best, best_side = val, side
    return best, best_side


def egg_cut_number(S: Scramble) -> tuple[float, list[tuple[int, int]] | None]:
    val, side = egg_cut_value(S.host, S.masks)
    if val == INF:
        return INF, None
    return val, _cut_edges(S.host, side)


def order(S: Scramble, budget: Budget | None = None) -> OrderReport:
    if S._report is None:
        h, hw = hitting_number(S, budget)
        e, cut = egg_cut_number(S)
        S._report = OrderReport(h, e, int(min(h, e)), hw, cut)
    return S._report


def scramble_order(S: Scramble) -> int:
    return order(S).order


def verify_report(S: Scramble, rep: OrderReport) -> bool:
    """Re-check both witnesses of an order report against the raw definitions."""
    hit = mask_of(rep.witness_hitting_set)
    if len(rep.witness_hitting_set) != rep.hitting or not all(m & hit for m in S.masks):
        return False
    if rep.witness_cut is None:
        return rep.egg_cut == INF and all(a & b for i, a in enumerate(S.masks) for b in S.masks[i + 1:])
    if len(rep.witness_cut) != rep.egg_cut:
        return False
    G = S.host
    remaining: dict[tuple[int, int], int] = {(u, v): m for u, v, m in G.edges()}
    for u, v in rep.witness_cut:
        key = (min(u, v), max(u, v))
        if remaining.get(key, 0) == 0:
            return False
        remaining[key] -= 1
    adj = [0] * G.n
    for (u, v), m in remaining.items():
        if m:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    comps = []
    rest = G.full_mask
    while rest:
        seen = rest & -rest
        frontier = seen
        while frontier:
            nxt = 0
            for x in iter_bits(frontier):
                nxt |= adj[x]
            nxt &= rest & ~seen
            seen |= nxt
            frontier = nxt
        comps.append(seen)
        rest &= ~seen
    if len(comps) != 2:
        return False
    return all(any(m & c == m for m in S.masks) for c in comps)


def pare_to_hitting(S: Scramble) -> Scramble:
    """Drop eggs in canonical order until the hitting number equals the order.

    The result keeps the original order (its egg-cut number can only grow).
    """
    rep = order(S)
    target = rep.order
    if rep.hitting == target:
        return S
    current = list(S.masks)
    for m in S.masks:
        current.remove(m)
        h, _ = min_hitting_set(current)
        if h == target:
            break
    return Scramble(S.host, current)


def prune_nested(S: Scramble) -> Scramble:
    """Keep only inclusion-minimal eggs; hitting and egg-cut numbers are unchanged."""
    return Scramble(S.host, minimal_sets(S.masks))


def carton_lower_bound(sn: int, n: int, max_degree: int) -> int:
    """``3 sn - n``, valid when the maximum degree is below the scramble number."""
    if max_degree >= sn:
        raise PreconditionViolated(f"needs max degree {max_degree} < scramble number {sn}")
    return 3 * sn - n


def _check_growth_params(n: int, d: int, c: float) -> None:
    if n < 1 or d < 0 or not c > 1:
        raise BadParams("need n >= 1, d >= 0, c > 1")


def scramble_size_lower_bound(n: int, d: int, c: float, eps: float) -> float:
    """``exp(c n^eps / (d+1))`` eggs for scrambles of order at least ``ceil(c n^(1/2+eps))``."""
    _check_growth_params(n, d, c)
    if not eps > 0:
        raise BadParams("eps must be > 0")
    return math.exp(c * n ** eps / (d + 1))


def required_order(n: int, c: float, eps: float) -> int:
    return math.ceil(c * n ** (0.5 + eps))


def min_egg_size(n: int, d: int, c: float) -> float:
    """Each egg of such a scramble has at least ``c sqrt(n) / (d+1)`` vertices."""
    _check_growth_params(n, d, c)
    return c * math.sqrt(n) / (d + 1)


def subdivision_transfer(S: Scramble, direction: str, u: int, w: int, v: int | None = None) -> Scramble:
    """Carry a scramble across subdividing ``uw`` into ``u - v - w``.

    ``forward``: ``S`` lives on the unsubdivided graph; ``v`` is joined to every
    egg containing ``u``; ``v`` must be ``S.host.n`` if given.
    ``backward``: ``S`` lives on the subdivided graph; ``v`` is removed from
    every egg (eggs that become empty are dropped) and the host is smoothed.
    Requires order at least 3.
    """
    G = S.host
    if direction == "forward":
        if v is not None and v != G.n:
            raise BadVertex(f"new vertex must be {G.n}, got {v}")
        v = G.n
        H = subdivide_edge(G, u, w)
        return Scramble(H, [m | (1 << v) if (m >> u) & 1 else m for m in S.masks])
    if direction != "backward":
        raise BadParams("direction must be 'forward' or 'backward'")
    if v is None or not 0 <= v < G.n or set(G.neighbors(v)) != {u, w} or G.degree(v) != 2:
        raise BadVertex(f"vertex {v} is not a subdivision vertex between {u} and {w}")
    if order(S).order < 3:
        raise OrderTooSmall("backward transfer needs a scramble of order >= 3")
    H = smooth_vertex(G, v)
    low = (1 << v) - 1
    out = []
    for m in S.masks:
        m &= ~(1 << v)
        if m:
            out.append((m & low) | ((m >> (v + 1)) << v))
    return Scramble(H, out)

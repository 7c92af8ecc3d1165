"""Carton number: exact brute force on tiny graphs, closed-form and interval values elsewhere."""
from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from ..budget import Budget, unlimited
from ..errors import FeasibilityCapExceeded, NotABridge
from ..flow import INF, min_edge_cut
from ..graph import MultiGraph, remove_edge_copy
from ..hitting import min_hitting_set
from ..params import connected_masks
from ..scramble import Scramble, carton_lower_bound, is_disjoint

CARTON_BRUTE_CAP_N = 6


@dataclass
class CartonResult:
    cart: int
    sn: int
    witness: Scramble


def _compat_graph(sets: list[int], cuts: dict, t: int) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(len(sets)))
    for i, a in enumerate(sets):
        for j in range(i + 1, len(sets)):
            b = sets[j]
            if a & b or cuts[i, j] >= t:
                H.add_edge(i, j)
    return H


def carton_bruteforce(G: MultiGraph, cap: int = CARTON_BRUTE_CAP_N,
                      budget: Budget | None = None) -> CartonResult:
    """Exact sn and cart by search over all scrambles of a tiny graph.

    A scramble has order >= t exactly when its eggs pairwise meet or are
    t-edge-separated, and its hitting number is >= t.  sn is the largest t
    for which some maximal such family is hit by no fewer than t vertices.
    cart is then the least size of an inclusion-antichain family with the
    same property at t = sn (deleting eggs that contain other eggs keeps
    the order, so a smallest carton is always an antichain).
    """
    if G.n > cap:
        raise FeasibilityCapExceeded(f"carton brute force capped at n={cap}, got {G.n}")
    budget = budget or unlimited("carton")
    sets = sorted(connected_masks(G, cap_n=cap), key=lambda m: (bin(m).count("1"), m))
    cuts = {}
    for i, a in enumerate(sets):
        for j in range(i + 1, len(sets)):
            b = sets[j]
            cuts[i, j] = INF if a & b else min_edge_cut(G, a, b)[0]

    sn = 1
    for t in range(G.n, 1, -1):
        H = _compat_graph(sets, cuts, t)
        if any(min_hitting_set([sets[i] for i in clique], budget)[0] >= t for clique in nx.find_cliques(H)):
            sn = t
            break
    if sn == 1:
        return CartonResult(1, 1, Scramble(G, [G.full_mask]))

    H = _compat_graph(sets, cuts, sn)
    ok = [set(H[i]) for i in range(len(sets))]
    for i, a in enumerate(sets):
        ok[i] = {j for j in ok[i] if a & sets[j] not in (a, sets[j])}

    start = sn
    if G.max_degree < sn:
        start = max(start, carton_lower_bound(sn, G.n, G.max_degree))

    def search(size: int) -> list[int] | None:
        def go(chosen: list[int], cands: list[int]) -> list[int] | None:
            budget.tick()
            masks = [sets[i] for i in chosen]
            left = size - len(chosen)
            h = min_hitting_set(masks, budget)[0] if masks else 0
            if h + left < sn:
                return None
            if left == 0:
                return chosen
            for pos, i in enumerate(cands):
                if len(cands) - pos < left:
                    break
                nxt = [j for j in cands[pos + 1:] if j in ok[i]]
                found = go(chosen + [i], nxt)
                if found is not None:
                    return found
            return None

        return go([], list(range(len(sets))))

    s = start
    while True:
        found = search(s)
        if found is not None:
            return CartonResult(s, sn, Scramble(G, [sets[i] for i in found]))
        s += 1


def bridge_compose_carton(G: MultiGraph, bridge: tuple[int, int], solver=None) -> int:
    """cart(G) from the two sides of a bridge.

    The side with larger sn wins; on a tie, the side with smaller cart.
    ``solver`` maps a graph to ``(sn, cart)``; it defaults to exact values
    from ``carton_value`` and fails when they are not pinned.
    """
    u, v = bridge
    side_u, side_v, G_u, G_v = remove_edge_copy(G, u, v)
    if G_u is None:
        raise NotABridge(f"edge ({u},{v}) is not a bridge")
    solver = solver or _exact_sn_cart
    a = solver(G_u)
    b = solver(G_v)
    first = min(a, b, key=lambda p: (-p[0], p[1]))
    return first[1]


def _exact_sn_cart(G: MultiGraph) -> tuple[int, int]:
    from .sandwich import carton_value, sn_interval

    sn = sn_interval(G)
    cart = carton_value(G, sn=sn)
    if not (sn.exact and cart.exact):
        raise FeasibilityCapExceeded(f"sn/cart not pinned on a component with n={G.n}")
    return sn.lower, cart.lower


def witness_is_disjoint(result: CartonResult) -> bool:
    return is_disjoint(result.witness)

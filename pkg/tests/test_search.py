from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import connected_subsets, multi_edge_connectivity, small_graphs
from scramble_lab import families as fam
from scramble_lab.bits import mask_of
from scramble_lab.corpus import connected_atlas, random_connected_graph
from scramble_lab.errors import FeasibilityCapExceeded, NotABridge
from scramble_lab.graph import build_graph, cartesian_product
from scramble_lab.scramble import INF, Scramble, is_disjoint, order, verify_report
from scramble_lab.search import (InvariantInterval, bridge_compose_carton,
                                 carton_bruteforce, carton_value, catalog_scrambles,
                                 dsn_cartesian_lower, dsn_exact, dsn_growth_bound,
                                 five_invariant_check, sn_interval)
from scramble_lab.search.carton import witness_is_disjoint


# --- oracles ------------------------------------------------------------------------

def dsn_oracle(G):
    """Best order over all families of pairwise disjoint connected sets."""
    sets = [mask_of(s) for s in connected_subsets(G)]
    best = 0

    def go(start, used, chosen):
        nonlocal best
        if chosen:
            best = max(best, order(Scramble(G, chosen)).order)
        for i in range(start, len(sets)):
            if not sets[i] & used:
                go(i + 1, used | sets[i], chosen + [sets[i]])

    go(0, 0, [])
    return best


def carton_oracle(G):
    """(sn, cart) over every nonempty family of connected sets."""
    sets = [mask_of(s) for s in connected_subsets(G)]
    assert len(sets) <= 15
    best_order, best_size = 0, None
    for r in range(1, len(sets) + 1):
        for fam_ in combinations(sets, r):
            o = order(Scramble(G, fam_)).order
            if o > best_order:
                best_order, best_size = o, r
    return best_order, best_size


TINY = [G for G in connected_atlas(5) if len(list(connected_subsets(G))) <= 15]


# --- dsn ----------------------------------------------------------------------------

@pytest.mark.parametrize("G,d", [
    (fam.path(4), 1), (fam.cycle(6), 2), (fam.complete(5), 4), (fam.petersen(), 4),
    (fam.bipartite_cycle(10), 6), (fam.grid(3, 3), 3), (build_graph(2, [(0, 1, 5)]), 2),
    (build_graph(1, []), 1),
])
def test_dsn_known(G, d):
    t, S = dsn_exact(G)
    assert t == d and is_disjoint(S) and order(S).order == t
    if t > 1:
        assert len(S) == t and sum(S.masks) == G.full_mask


def test_dsn_band():
    t, S = dsn_exact(fam.band(3))
    assert t == 6 and verify_report(S, order(S))


@pytest.mark.parametrize("G", list(connected_atlas(5, min_n=2)))
def test_dsn_matches_disjoint_family_oracle_atlas(G):
    assert dsn_exact(G)[0] == dsn_oracle(G)


@given(small_graphs(max_n=6, simple=False))
@settings(max_examples=30, deadline=None)
def test_dsn_matches_disjoint_family_oracle_random(G):
    assert dsn_exact(G)[0] == dsn_oracle(G)


@given(small_graphs(max_n=9, simple=False))
@settings(max_examples=40, deadline=None)
def test_dsn_structural_bounds(G):
    t, _ = dsn_exact(G)
    lam = multi_edge_connectivity(G)
    assert t >= min(G.n, lam)
    assert t <= dsn_growth_bound(G.n, G.max_degree)


@given(small_graphs(min_n=3, max_n=8), st.data())
@settings(max_examples=40, deadline=None)
def test_dsn_subgraph_monotone(G, data):
    H = nx.Graph([(u, v) for u, v, _ in G.edges()])
    removable = [e for e in H.edges() if nx.is_connected(nx.restricted_view(H, [], [e]))]
    if not removable:
        return
    u, v = data.draw(st.sampled_from(removable))
    sub = build_graph(G.n, [(a, b, m) for a, b, m in G.edges() if {a, b} != {u, v}])
    assert dsn_exact(sub)[0] <= dsn_exact(G)[0]


def test_dsn_growth_bound_values():
    assert dsn_growth_bound(10, 3) == 5
    assert dsn_growth_bound(16, 6) == 9
    assert dsn_growth_bound(1, 0) == 0
    assert dsn_growth_bound(9, 4) == 6
    assert dsn_growth_bound(4, 2) == 2


def test_dsn_cap():
    with pytest.raises(FeasibilityCapExceeded):
        dsn_exact(fam.path(15))


# --- carton brute force -------------------------------------------------------------

@pytest.mark.parametrize("G", TINY)
def test_carton_bruteforce_matches_family_oracle(G):
    res = carton_bruteforce(G)
    assert (res.sn, res.cart) == carton_oracle(G)
    assert len(res.witness) == res.cart and order(res.witness).order == res.sn


@pytest.mark.parametrize("G", list(connected_atlas(5, min_n=2)))
def test_carton_equals_sn_iff_dsn_equals_sn(G):
    res = carton_bruteforce(G)
    d = dsn_exact(G)[0]
    assert (res.cart == res.sn) == (d == res.sn)
    if res.cart == res.sn:
        assert witness_is_disjoint(res)


@pytest.mark.parametrize("G", list(connected_atlas(5, min_n=2)))
def test_small_scramble_number_equals_dsn(G):
    res = carton_bruteforce(G)
    if res.sn <= 3:
        assert dsn_exact(G)[0] == res.sn == res.cart


def test_wheel_has_carton_above_sn():
    W = build_graph(6, [(0, i) for i in range(1, 6)] + [(i, i % 5 + 1) for i in range(1, 6)])
    res = carton_bruteforce(W)
    assert (res.sn, res.cart) == (4, 6)


# --- sandwich -----------------------------------------------------------------------

@pytest.mark.parametrize("G", list(connected_atlas(6, min_n=2))[::3])
def test_sn_interval_contains_bruteforce(G):
    iv = sn_interval(G)
    res = carton_bruteforce(G)
    assert iv.lower <= res.sn <= iv.upper
    cv = carton_value(G)
    assert cv.exact and cv.lower == res.cart


def test_sn_interval_examples():
    assert (sn_interval(fam.cycle(8)).lower, sn_interval(fam.cycle(8)).upper) == (2, 2)
    iv = sn_interval(fam.complete(6))
    assert iv.exact and iv.lower == 5
    iv = sn_interval(fam.band(3))
    assert iv.exact and iv.lower == 6
    iv = sn_interval(build_graph(1, []))
    assert iv.exact and iv.lower == 1


def test_sn_interval_rook_and_carton_lower_bound():
    R = fam.rook(4, 4)
    iv = sn_interval(R)
    assert (iv.lower, iv.upper) == (11, 12)
    cv = carton_value(R, sn=iv)
    assert cv.lower == 17 and cv.upper == INF and not cv.exact


def test_interval_validation():
    with pytest.raises(ValueError):
        InvariantInterval(3, 2)
    assert InvariantInterval(2, INF).to_json()["upper"] == "inf"


def test_catalog_scrambles_are_valid():
    for G in [fam.grid(3, 4), fam.band(2), fam.rook(3, 3), cartesian_product(fam.cycle(3), fam.path(2))]:
        for label, S in catalog_scrambles(G):
            assert all(G.is_connected_mask(m) for m in S.masks), label


@pytest.mark.parametrize("G,cart", [
    (fam.cycle(9), 2), (fam.multipartite(2, 3, 4), 5), (fam.grid(3, 5), 3), (fam.cylinder(5, 2), 4),
    (fam.path(5), 1),
])
def test_family_carton_formula(G, cart):
    cv = carton_value(G)
    assert cv.exact and cv.lower == cart


def test_family_formula_agrees_with_own_solvers():
    for G in [fam.cycle(5), fam.multipartite(2, 3), fam.grid(2, 3), fam.path(4)]:
        assert carton_value(G).lower == carton_value(G, use_family=False).lower


# --- composition and products -------------------------------------------------------

def test_bridge_compose_examples():
    two_c4 = build_graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4)])
    assert bridge_compose_carton(two_c4, (0, 4)) == 2
    tri_path = build_graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
    assert bridge_compose_carton(tri_path, (2, 3)) == carton_bruteforce(tri_path).cart == 2
    assert bridge_compose_carton(fam.path(4), (1, 2)) == 1
    with pytest.raises(NotABridge):
        bridge_compose_carton(fam.cycle(4), (0, 1))


def test_bridge_compose_matches_bruteforce_random():
    rng = random.Random(11)
    for _ in range(8):
        A = random_connected_graph(3, 0.7, rng)
        B = random_connected_graph(3, 0.7, rng)
        edges = [(u, v, m) for u, v, m in A.edges()] + [(u + 3, v + 3, m) for u, v, m in B.edges()]
        edges.append((0, 3, 1))
        G = build_graph(6, edges)
        assert bridge_compose_carton(G, (0, 3)) == carton_bruteforce(G).cart


@pytest.mark.parametrize("G,H", [
    (fam.path(2), fam.cycle(5)), (fam.path(3), fam.complete(4)), (fam.cycle(3), fam.cycle(4)),
    (fam.complete(3), fam.path(3)),
])
def test_dsn_cartesian_lower(G, H):
    pb = dsn_cartesian_lower(G, H)
    assert pb.holds and is_disjoint(pb.scramble)
    if pb.scramble.host.n <= 12:
        assert dsn_exact(pb.scramble.host)[0] >= pb.bound


def test_five_invariant_check():
    for G in [fam.complete(4), fam.cycle(5), fam.multipartite(3, 3)]:
        rep = five_invariant_check(G)
        assert rep.applies and rep.passed and set(rep.values) == {"gon", "dsn", "sn", "cart", "scw"}
    assert not five_invariant_check(fam.petersen()).applies

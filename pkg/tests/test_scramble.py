from __future__ import annotations

import math
import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import connected_subsets, small_graphs, to_nx
from scramble_lab import families as fam
from scramble_lab.errors import (BadParams, BadVertex, DisconnectedEgg, EmptyCollection, EmptyEgg,
                                 OrderTooSmall, PreconditionViolated)
from scramble_lab.graph import build_graph, subdivide_edge
from scramble_lab.hitting import min_hitting_set
from scramble_lab.params import alpha_k
from scramble_lab.scramble import (INF, Scramble, carton_lower_bound, egg_cut_number,
                                   hitting_number, is_disjoint, make_scramble, min_egg_size, order,
                                   pare_to_hitting, prune_nested, required_order,
                                   scramble_size_lower_bound, subdivision_transfer,
                                   uniform_scramble, verify_report, vertegg_scramble)


# --- brute-force oracles ------------------------------------------------------------

def hitting_oracle(n, eggs):
    for r in range(n + 1):
        for c in combinations(range(n), r):
            cs = set(c)
            if all(cs & set(e) for e in eggs):
                return r


def egg_cut_oracle(G, eggs):
    """Minimum cut over bipartitions into two connected sides that each contain an egg."""
    H = to_nx(G)
    best = INF
    eggs = [set(e) for e in eggs]
    for r in range(1, G.n):
        for A in combinations(range(G.n), r):
            if 0 not in A:
                continue
            A = set(A)
            B = set(range(G.n)) - A
            if not (nx.is_connected(H.subgraph(A)) and nx.is_connected(H.subgraph(B))):
                continue
            if any(e <= A for e in eggs) and any(e <= B for e in eggs):
                best = min(best, sum(1 for u, v in G.edge_copies() if (u in A) != (v in A)))
    return best


@st.composite
def scrambles(draw, max_n=7, max_eggs=8):
    G = draw(small_graphs(max_n=max_n, simple=draw(st.booleans())))
    pool = list(connected_subsets(G))
    idx = draw(st.lists(st.integers(0, len(pool) - 1), min_size=1, max_size=max_eggs))
    return make_scramble(G, [pool[i] for i in idx])


# --- construction -----------------------------------------------------------------

def test_validation_errors():
    G = fam.path(4)
    with pytest.raises(DisconnectedEgg):
        make_scramble(G, [[0, 2]])
    with pytest.raises(EmptyEgg):
        make_scramble(G, [[]])
    with pytest.raises(EmptyCollection):
        make_scramble(G, [])
    with pytest.raises(BadVertex):
        make_scramble(G, [[7]])


def test_duplicates_dropped_and_canonical_order():
    S = make_scramble(fam.cycle(5), [[2, 1], [0], [1, 2], [4, 0]])
    assert S.eggs == [(0,), (0, 4), (1, 2)]


# --- hand examples ----------------------------------------------------------------

def test_vertegg_complete_graph():
    S = vertegg_scramble(fam.complete(5))
    rep = order(S)
    assert (rep.hitting, rep.egg_cut, rep.order) == (5, 4, 4)


def test_vertegg_cycle():
    rep = order(vertegg_scramble(fam.cycle(7)))
    assert (rep.hitting, rep.egg_cut, rep.order) == (7, 2, 2)


def test_single_egg_has_infinite_egg_cut():
    rep = order(make_scramble(fam.path(3), [[0, 1, 2]]))
    assert rep.egg_cut == INF and rep.order == 1 and rep.witness_cut is None


def test_pairwise_intersecting_eggs():
    S = make_scramble(fam.cycle(4), [[0, 1], [1, 2], [1, 3, 0]])
    e, cut = egg_cut_number(S)
    assert e == INF and cut is None
    assert order(S).order == 1


def test_uniform_edges_on_cycle():
    S = uniform_scramble(fam.cycle(6), 2)
    assert len(S) == 6
    rep = order(S)
    assert rep.hitting == 3 and rep.egg_cut == 2 and rep.order == 2


def test_uniform_hitting_identity():
    # hitting number of the k-uniform scramble is n - alpha_{k-1}
    for G in [fam.petersen(), fam.grid(3, 3), fam.bipartite_cycle(10), fam.complete(5)]:
        for k in (2, 3, 4):
            assert hitting_number(uniform_scramble(G, k))[0] == G.n - alpha_k(G, k - 1)


def test_disjoint_flag():
    assert is_disjoint(vertegg_scramble(fam.cycle(4)))
    assert not is_disjoint(uniform_scramble(fam.cycle(4), 2))


def test_multigraph_egg_cut_counts_copies():
    G = build_graph(2, [(0, 1, 3)])
    rep = order(vertegg_scramble(G))
    assert rep.egg_cut == 3 and rep.order == 2


# --- oracle comparisons -------------------------------------------------------------

@given(scrambles())
@settings(max_examples=80, deadline=None)
def test_order_matches_bruteforce(S):
    rep = order(S)
    assert rep.hitting == hitting_oracle(S.host.n, S.eggs)
    assert rep.egg_cut == egg_cut_oracle(S.host, S.eggs)
    assert rep.order == min(rep.hitting, rep.egg_cut)
    assert verify_report(S, rep)


def test_min_hitting_set_bruteforce_random():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 10)
        sets = [rng.randint(1, (1 << n) - 1) for _ in range(rng.randint(1, 12))]
        size, mask = min_hitting_set(sets)
        assert all(mask & s for s in sets) and mask.bit_count() == size
        assert size == hitting_oracle(n, [[i for i in range(n) if s >> i & 1] for s in sets])


def test_verify_report_rejects_tampering():
    S = vertegg_scramble(fam.cycle(5))
    rep = order(S)
    from dataclasses import replace
    assert not verify_report(S, replace(rep, witness_hitting_set=rep.witness_hitting_set[:-1]))
    assert not verify_report(S, replace(rep, witness_cut=rep.witness_cut[:1]))


# --- reductions -------------------------------------------------------------------

@given(scrambles())
@settings(max_examples=60, deadline=None)
def test_pare_keeps_order_and_equalises_hitting(S):
    rep = order(S)
    P = pare_to_hitting(S)
    assert set(P.masks) <= set(S.masks)
    prep = order(P)
    assert prep.order == rep.order == prep.hitting


@given(scrambles())
@settings(max_examples=60, deadline=None)
def test_prune_keeps_both_numbers(S):
    P = prune_nested(S)
    a, b = order(S), order(P)
    assert (a.hitting, a.egg_cut) == (b.hitting, b.egg_cut)
    assert not any(x != y and x & y == x for x in P.masks for y in P.masks)


@given(scrambles(max_eggs=10))
@settings(max_examples=60, deadline=None)
def test_removing_one_egg_drops_hitting_by_at_most_one(S):
    if len(S) < 2:
        return
    h = order(S).hitting
    for m in S.masks:
        T = Scramble(S.host, [x for x in S.masks if x != m])
        assert order(T).hitting >= h - 1


def test_epsilon5_egg_deletion_drops_hitting():
    G = fam.bipartite_cycle(10)
    S = uniform_scramble(G, 5)
    assert order(S).hitting == 6
    for m in S.masks[:20]:
        assert order(Scramble(G, [x for x in S.masks if x != m])).hitting == 5


# --- subdivision transfer ---------------------------------------------------------

def test_forward_transfer_example():
    S = vertegg_scramble(fam.cycle(3))
    T = subdivision_transfer(S, "forward", 0, 1)
    assert T.host.n == 4 and T.eggs == [(1,), (2,), (0, 3)]
    assert order(T).order == order(S).order


def test_backward_transfer_and_errors():
    G = fam.complete(5)
    S = subdivision_transfer(vertegg_scramble(G), "forward", 0, 1)
    assert order(S).order == 4
    B = subdivision_transfer(S, "backward", 0, 1, 5)
    assert B == vertegg_scramble(G)
    with pytest.raises(BadVertex):
        subdivision_transfer(S, "backward", 0, 1, 2)
    with pytest.raises(OrderTooSmall):
        subdivision_transfer(vertegg_scramble(subdivide_edge(fam.cycle(4), 0, 1)), "backward", 0, 1, 4)
    with pytest.raises(BadParams):
        subdivision_transfer(S, "sideways", 0, 1, 5)


@given(scrambles(max_n=6))
@settings(max_examples=50, deadline=None)
def test_forward_transfer_preserves_order(S):
    G = S.host
    u, w, _ = G.edges()[0]
    T = subdivision_transfer(S, "forward", u, w)
    assert order(T).order == order(S).order


@given(scrambles(max_n=6))
@settings(max_examples=50, deadline=None)
def test_backward_transfer_preserves_large_order(S):
    G = S.host
    u, w, _ = G.edges()[-1]
    F = subdivision_transfer(S, "forward", u, w)
    if order(F).order < 3:
        return
    B = subdivision_transfer(F, "backward", u, w, G.n)
    assert order(B).order >= order(F).order


# --- counting bounds --------------------------------------------------------------

def test_carton_lower_bound():
    assert carton_lower_bound(11, 16, 6) == 17
    with pytest.raises(PreconditionViolated):
        carton_lower_bound(3, 9, 3)


def test_growth_bounds():
    assert scramble_size_lower_bound(100, 3, 2.0, 0.5) == pytest.approx(math.exp(2 * 10 / 4))
    assert min_egg_size(100, 4, 2.0) == pytest.approx(4.0)
    assert required_order(100, 2.0, 0.5) == 200
    with pytest.raises(BadParams):
        scramble_size_lower_bound(10, 2, 1.0, 0.5)
    with pytest.raises(BadParams):
        scramble_size_lower_bound(10, 2, 2.0, 0.0)


def test_band_middle_verteggs_order_six_networkx_oracle():
    k = 3
    G = fam.band(k)
    H = to_nx(G)
    mid = list(range(k, 3 * k))
    cut = min(nx.edge_connectivity(nx.Graph(H), a, b) for a in mid for b in mid if a < b)
    S = make_scramble(G, [[v] for v in mid])
    rep = order(S)
    assert (rep.hitting, rep.egg_cut, rep.order) == (2 * k, cut, 6)


def test_bipartite_cycle_edge_eggs_equal_edge_count():
    G = fam.bipartite_cycle(10)
    S = uniform_scramble(G, 2)
    assert len(S) == G.num_edges == 30
    assert order(S).order == 6

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings, strategies as st

from conftest import small_graphs
from scramble_lab import families as fam
from scramble_lab.chipfiring import (Divisor, dhar_burn, fire_set, gonality_exact,
                                     has_positive_rank, q_reduce)
from scramble_lab.errors import (BadParams, BadSet, CapExceeded, FeasibilityCapExceeded,
                                 NegativeOutsideSource)
from scramble_lab.graph import build_graph


# --- linear-algebra oracle ----------------------------------------------------------

def laplacian(G):
    L = [[0] * G.n for _ in range(G.n)]
    for u, v, m in G.edges():
        L[u][v] -= m
        L[v][u] -= m
        L[u][u] += m
        L[v][v] += m
    return L


def solve(A, b):
    """Exact Gaussian elimination over the rationals; A is nonsingular."""
    n = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    for c in range(n):
        p = next(r for r in range(c, n) if M[r][c] != 0)
        M[c], M[p] = M[p], M[c]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c] / M[c][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [M[i][n] / M[i][i] for i in range(n)]


def equivalent(G, D, E):
    """D ~ E iff D - E = L x for an integer vector x (fix x_0 = 0)."""
    if sum(D) != sum(E):
        return False
    if G.n == 1:
        return True
    L = laplacian(G)
    Lr = [row[1:] for row in L[1:]]
    b = [d - e for d, e in zip(D[1:], E[1:])]
    return all(x.denominator == 1 for x in solve(Lr, b))


def effective_divisors(n, d):
    for combo in combinations_with_replacement(range(n), d):
        chips = [0] * n
        for v in combo:
            chips[v] += 1
        yield chips


def rank_positive_oracle(G, D):
    d = sum(D)
    if d < 1:
        return False
    effs = [E for E in effective_divisors(G.n, d) if equivalent(G, D, E)]
    return all(any(E[v] >= 1 for E in effs) for v in range(G.n))


def gonality_oracle(G):
    d = 1
    while True:
        if any(rank_positive_oracle(G, D) for D in effective_divisors(G.n, d)):
            return d
        d += 1


def is_reduced(G, D, q):
    return all(D[v] >= 0 for v in range(G.n) if v != q) and not dhar_burn(G, D, q)


@st.composite
def graph_and_divisor(draw, max_n=6, lo=-3, hi=4):
    G = draw(small_graphs(max_n=max_n, simple=draw(st.booleans())))
    chips = draw(st.lists(st.integers(lo, hi), min_size=G.n, max_size=G.n))
    return G, chips


# --- firing -------------------------------------------------------------------------

def test_fire_vertex_example():
    G = fam.path(3)
    assert fire_set(G, [1, 1, 1], [1]).chips == (2, -1, 2)


def test_fire_set_errors():
    with pytest.raises(BadSet):
        fire_set(fam.path(3), [0, 0, 0], [])
    with pytest.raises(BadSet):
        fire_set(fam.path(3), [0, 0, 0], [5])
    with pytest.raises(BadParams):
        fire_set(fam.path(3), [0, 0], [0])


@given(graph_and_divisor(), st.data())
@settings(max_examples=60, deadline=None)
def test_fire_preserves_degree_and_complement_inverts(GD, data):
    G, D = GD
    A = data.draw(st.sets(st.integers(0, G.n - 1), min_size=1))
    F = fire_set(G, D, A)
    assert F.degree == sum(D)
    assert equivalent(G, D, F.chips)
    rest = set(range(G.n)) - A
    back = fire_set(G, F, rest) if rest else F
    assert back.chips == tuple(D)


# --- burning and reduction ----------------------------------------------------------

def test_dhar_examples():
    C = fam.cycle(4)
    assert dhar_burn(C, [0, 0, 0, 0], 0) == frozenset()
    assert dhar_burn(C, [0, 1, 0, 1], 0) == frozenset({1, 2, 3})
    with pytest.raises(NegativeOutsideSource):
        dhar_burn(C, [0, -1, 0, 0], 0)


def test_q_reduce_examples():
    C = fam.cycle(4)
    # already reduced: the far vertex burns from both sides
    assert q_reduce(C, [0, 0, 1, 0], 0).chips == (0, 0, 1, 0)
    # firing everything but the source moves both chips onto it
    assert q_reduce(C, [0, 1, 0, 1], 0).chips == (2, 0, 0, 0)
    assert q_reduce(fam.path(3), [0, 0, 1], 0).chips == (1, 0, 0)
    assert q_reduce(fam.path(3), [1, -1, 0], 2).chips == (0, 0, 0)


@given(graph_and_divisor())
@settings(max_examples=80, deadline=None)
def test_q_reduce_is_reduced_equivalent_idempotent(GD):
    G, D = GD
    for q in range(G.n):
        R = q_reduce(G, D, q)
        assert is_reduced(G, R.chips, q)
        assert equivalent(G, D, R.chips)
        assert q_reduce(G, R, q) == R


@given(graph_and_divisor(), st.data())
@settings(max_examples=40, deadline=None)
def test_q_reduce_is_class_invariant(GD, data):
    G, D = GD
    A = data.draw(st.sets(st.integers(0, G.n - 1), min_size=1))
    F = fire_set(G, D, A)
    for q in range(G.n):
        assert q_reduce(G, D, q) == q_reduce(G, F, q)


# --- rank and gonality --------------------------------------------------------------

@given(graph_and_divisor(max_n=5, lo=-1, hi=2))
@settings(max_examples=60, deadline=None)
def test_positive_rank_matches_oracle(GD):
    G, D = GD
    assert has_positive_rank(G, D) == rank_positive_oracle(G, D)


def test_positive_rank_examples():
    assert not has_positive_rank(fam.cycle(5), [1, 0, 0, 0, 0])
    assert has_positive_rank(fam.cycle(5), [1, 0, 1, 0, 0])
    assert has_positive_rank(fam.path(4), [0, 0, 1, 0])
    assert not has_positive_rank(fam.path(2), [-1, 1])


@pytest.mark.parametrize("G,gon", [
    (fam.path(6), 1), (fam.star(5), 1), (fam.cycle(7), 2), (fam.complete(4), 3), (fam.complete(5), 4),
    (fam.multipartite(2, 3), 2), (fam.multipartite(3, 3), 3), (fam.grid(3, 3), 3),
    (build_graph(2, [(0, 1, 3)]), 2), (fam.petersen(), 4), (fam.bipartite_cycle(10), 6),
])
def test_gonality_known_values(G, gon):
    d, D = gonality_exact(G, cap=8)
    assert d == gon and D.degree == gon and has_positive_rank(G, D)


def test_gonality_matches_oracle_on_random_graphs():
    rng = random.Random(7)
    from scramble_lab.corpus import random_connected_graph
    for _ in range(15):
        G = random_connected_graph(rng.randint(2, 5), rng.random() * 0.7, rng)
        assert gonality_exact(G)[0] == gonality_oracle(G)


def test_gonality_caps():
    with pytest.raises(CapExceeded):
        gonality_exact(fam.complete(5), cap=3)
    with pytest.raises(FeasibilityCapExceeded):
        gonality_exact(fam.complete(5), cap=4, enum_cap=10)
    with pytest.raises(BadParams):
        gonality_exact(fam.path(3), cap=0)


def test_divisor_json_roundtrip():
    D = Divisor((1, -2, 0))
    assert Divisor.from_json(D.to_json()) == D and D.degree == -1

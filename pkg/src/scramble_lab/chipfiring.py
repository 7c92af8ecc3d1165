"""Divisors, set-firing, Dhar's burning algorithm, q-reduction and gonality."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from .budget import Budget, unlimited
from .errors import BadSet, CapExceeded, FeasibilityCapExceeded, NegativeOutsideSource, BadParams
from .graph import MultiGraph

GONALITY_ENUM_CAP = 2_000_000


@dataclass(frozen=True)
class Divisor:
    chips: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.chips)

    def __getitem__(self, v: int) -> int:
        return self.chips[v]

    def __len__(self) -> int:
        return len(self.chips)

    def to_json(self) -> dict:
        return {"chips": list(self.chips)}

    @classmethod
    def from_json(cls, obj: dict) -> "Divisor":
        return cls(tuple(int(c) for c in obj["chips"]))


def as_divisor(D) -> Divisor:
    return D if isinstance(D, Divisor) else Divisor(tuple(int(c) for c in D))


def _check(G: MultiGraph, D: Divisor) -> None:
    if len(D) != G.n:
        raise BadParams(f"divisor has {len(D)} entries, graph has {G.n} vertices")


def fire_set(G: MultiGraph, D, A) -> Divisor:
    """Fire every vertex of ``A`` once: chips cross each edge leaving ``A``."""
    D = as_divisor(D)
    _check(G, D)
    A = set(A)
    if not A or any(not 0 <= v < G.n for v in A):
        raise BadSet(f"firing set {sorted(A)} must be a nonempty subset of 0..{G.n - 1}")
    chips = list(D.chips)
    for v in A:
        for u, m in G.neighbors(v).items():
            if u not in A:
                chips[v] -= m
                chips[u] += m
    return Divisor(tuple(chips))


def dhar_burn(G: MultiGraph, D, q: int) -> frozenset[int]:
    """Start a fire at ``q``; a vertex burns once its burnt edges outnumber its chips.

    Returns the vertices left unburnt.
    """
    D = as_divisor(D)
    _check(G, D)
    if any(D[v] < 0 for v in range(G.n) if v != q):
        raise NegativeOutsideSource(f"divisor {D.chips} is negative away from {q}")
    burnt = {q}
    heat = [0] * G.n
    stack = [q]
    while stack:
        v = stack.pop()
        for u, m in G.neighbors(v).items():
            if u in burnt:
                continue
            heat[u] += m
            if heat[u] > D[u]:
                burnt.add(u)
                stack.append(u)
    return frozenset(range(G.n)) - burnt


def _clear_debt(G: MultiGraph, chips: list[int], q: int) -> None:
    """Bring every vertex other than ``q`` out of debt.

    Layer by layer from the farthest BFS distance inward: while a vertex at
    distance k is in debt, fire everything closer than k to ``q``. Vertices
    at distance >= k only gain, so finished layers stay clean.
    """
    dist = G.distances_from(q)
    for k in range(max(dist), 0, -1):
        inner = [v for v in range(G.n) if dist[v] < k]
        inner_set = set(inner)
        layer = [v for v in range(G.n) if dist[v] == k]
        while any(chips[v] < 0 for v in layer):
            for v in inner:
                for u, m in G.neighbors(v).items():
                    if u not in inner_set:
                        chips[v] -= m
                        chips[u] += m


def q_reduce(G: MultiGraph, D, q: int) -> Divisor:
    """The unique ``q``-reduced divisor linearly equivalent to ``D``."""
    D = as_divisor(D)
    _check(G, D)
    chips = list(D.chips)
    _clear_debt(G, chips, q)
    while True:
        unburnt = dhar_burn(G, chips, q)
        if not unburnt:
            return Divisor(tuple(chips))
        for v in unburnt:
            for u, m in G.neighbors(v).items():
                if u not in unburnt:
                    chips[v] -= m
                    chips[u] += m


def has_positive_rank(G: MultiGraph, D) -> bool:
    """True iff ``D - v`` is equivalent to an effective divisor for every vertex ``v``."""
    D = as_divisor(D)
    _check(G, D)
    if D.degree < 0:
        return False
    effective = all(c >= 0 for c in D.chips)
    # vertices carrying chips pass trivially when D is effective; test the rest first
    order_ = sorted(range(G.n), key=lambda v: (D[v] > 0, v))
    for v in order_:
        if effective and D[v] > 0:
            continue
        if q_reduce(G, D, v)[v] < 1:
            return False
    return True


def _colex_multisets(n: int, d: int):
    return sorted(combinations_with_replacement(range(n), d), key=lambda t: t[::-1])


def gonality_exact(G: MultiGraph, cap: int = 6, budget: Budget | None = None,
                   enum_cap: int = GONALITY_ENUM_CAP) -> tuple[int, Divisor]:
    """Least degree of an effective positive-rank divisor, with the first witness in colex order."""
    if cap < 1:
        raise BadParams("cap must be >= 1")
    budget = budget or unlimited("gonality")
    for d in range(1, cap + 1):
        if comb(G.n + d - 1, d) > enum_cap:
            raise FeasibilityCapExceeded(f"C({G.n + d - 1},{d}) divisors exceed cap {enum_cap}")
        for support in _colex_multisets(G.n, d):
            budget.tick()
            chips = [0] * G.n
            for v in support:
                chips[v] += 1
            if has_positive_rank(G, chips):
                return d, Divisor(tuple(chips))
    raise CapExceeded(f"no positive-rank divisor of degree <= {cap}")

"""Exact minimum hitting set by branch and bound over bitmask families."""
from __future__ import annotations

from .bits import iter_bits
from .budget import Budget, unlimited
from .errors import EmptyEgg

DEFAULT_NODES = 2_000_000


def minimal_sets(sets) -> list[int]:
    """Inclusion-minimal members (duplicates removed), ascending by size then value."""
    uniq = sorted(set(sets), key=lambda s: (s.bit_count(), s))
    kept: list[int] = []
    for s in uniq:
        if not any(k & s == k for k in kept):
            kept.append(s)
    return kept


def _greedy(sets: list[int]) -> int:
    chosen = 0
    active = list(sets)
    while active:
        counts: dict[int, int] = {}
        for s in active:
            for v in iter_bits(s):
                counts[v] = counts.get(v, 0) + 1
        v = max(counts, key=lambda x: (counts[x], -x))
        chosen |= 1 << v
        active = [s for s in active if not (s >> v) & 1]
    return chosen


def _packing(sets: list[int]) -> int:
    used = 0
    count = 0
    for s in sorted(sets, key=int.bit_count):
        if not s & used:
            used |= s
            count += 1
    return count


def min_hitting_set(sets, budget: Budget | None = None) -> tuple[int, int]:
    """Return ``(size, mask)`` of a minimum vertex set meeting every set.

    Branches on the vertex lying in the most unhit sets (ties: lowest index),
    first including it and then excluding it. A greedy cover seeds the upper
    bound; a greedy disjoint packing gives the lower bound.
    """
    family = list(sets)
    if any(s == 0 for s in family):
        raise EmptyEgg("cannot hit an empty set")
    family = minimal_sets(family)
    if not family:
        return 0, 0
    budget = budget or unlimited("hitting set")
    best_mask = _greedy(family)
    best = best_mask.bit_count()

    def rec(active: list[int], chosen: int, size: int) -> None:
        nonlocal best, best_mask
        budget.tick()
        if not active:
            if size < best:
                best, best_mask = size, chosen
            return
        if size + _packing(active) >= best:
            return
        forced = next((s for s in active if s & (s - 1) == 0), 0)
        if forced:
            v = forced.bit_length() - 1
            rec([s for s in active if not (s >> v) & 1], chosen | forced, size + 1)
            return
        counts: dict[int, int] = {}
        for s in active:
            for u in iter_bits(s):
                counts[u] = counts.get(u, 0) + 1
        v = max(counts, key=lambda x: (counts[x], -x))
        bit = 1 << v
        rec([s for s in active if not s & bit], chosen | bit, size + 1)
        rec([s & ~bit for s in active], chosen, size)

    rec(family, 0, 0)
    return best, best_mask


def hits_all(mask: int, sets) -> bool:
    return all(s & mask for s in sets)

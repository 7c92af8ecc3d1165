"""Generators for the named graph families.

Every generator returns a graph tagged with ``family=(name, *params)`` so that
later stages can recognise it (family formulas, product scrambles).
"""
from __future__ import annotations

from itertools import combinations

from .errors import BadParams
from .graph import MultiGraph, build_graph, cartesian_product


def path(n: int) -> MultiGraph:
    if n < 1:
        raise BadParams("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)], family=("path", n))


def cycle(n: int) -> MultiGraph:
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)], family=("cycle", n))


def complete(n: int) -> MultiGraph:
    if n < 1:
        raise BadParams("complete graph needs n >= 1")
    return build_graph(n, combinations(range(n), 2), family=("complete", n))


def star(leaves: int) -> MultiGraph:
    if leaves < 1:
        raise BadParams("star needs at least one leaf")
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)], family=("star", leaves))


def multipartite(*parts: int) -> MultiGraph:
    if len(parts) < 2 or any(p < 1 for p in parts):
        raise BadParams("complete multipartite graph needs >= 2 nonempty parts")
    label = []
    for i, p in enumerate(parts):
        label += [i] * p
    edges = [(u, v) for u, v in combinations(range(len(label)), 2) if label[u] != label[v]]
    return build_graph(len(label), edges, family=("multipartite", *parts))


def grid(m: int, n: int) -> MultiGraph:
    if m < 1 or n < 1:
        raise BadParams("grid needs m, n >= 1")
    return cartesian_product(path(m), path(n), family=("grid", m, n))


def cylinder(m: int, n: int) -> MultiGraph:
    """``Y_{m,n} = C_m □ P_n``."""
    if m < 3 or n < 1:
        raise BadParams("cylinder needs m >= 3, n >= 1")
    return cartesian_product(cycle(m), path(n), family=("cylinder", m, n))


def rook(a: int, b: int) -> MultiGraph:
    """``R_{a,b} = K_a □ K_b``; vertex ``i*b + j`` is square (row i, column j)."""
    if a < 1 or b < 1:
        raise BadParams("rook graph needs a, b >= 1")
    return cartesian_product(complete(a), complete(b), family=("rook", a, b))


def bipartite_cycle(n: int) -> MultiGraph:
    """``K_{m+1,m-1}`` (n=2m) or ``K_{m+1,m}`` (n=2m+1) plus a cycle on the larger side.

    Vertices ``0..m`` form the larger side (and the cycle).
    """
    if n < 6:
        raise BadParams("bipartite_cycle needs n >= 6")
    m = n // 2
    big = m + 1
    small = n - big
    edges = [(i, big + j) for i in range(big) for j in range(small)]
    edges += [(i, (i + 1) % big) for i in range(big)]
    return build_graph(n, edges, family=("bipartite_cycle", n))


def band(k: int) -> MultiGraph:
    """The k-tree on ``4k`` vertices with ``v_i ~ v_j`` iff ``|i-j| <= k`` (0-based)."""
    if k < 1:
        raise BadParams("band needs k >= 1")
    n = 4 * k
    edges = [(i, j) for i in range(n) for j in range(i + 1, min(n, i + k + 1))]
    return build_graph(n, edges, family=("band", k))


def multipath(n: int, mult: int) -> MultiGraph:
    """Path on ``n`` vertices with every edge repeated ``mult`` times."""
    if n < 1 or mult < 1:
        raise BadParams("multipath needs n >= 1, mult >= 1")
    return build_graph(n, [(i, i + 1, mult) for i in range(n - 1)], family=("multipath", n, mult))


def petersen() -> MultiGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner, family=("petersen",))


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "star": star,
    "multipartite": multipartite,
    "grid": grid,
    "cylinder": cylinder,
    "rook": rook,
    "bipartite_cycle": bipartite_cycle,
    "band": band,
    "multipath": multipath,
    "petersen": petersen,
}


def generate_family(name: str, *params: int) -> MultiGraph:
    """Dispatch by family name, e.g. ``generate_family("rook", 4, 4)``."""
    try:
        fn = FAMILIES[name]
    except KeyError:
        raise BadParams(f"unknown family {name!r}; known: {sorted(FAMILIES)}") from None
    try:
        return fn(*params)
    except TypeError as exc:
        raise BadParams(f"bad parameters for {name}: {params}") from exc

"""Named test graphs and seeded random connected graphs."""
from __future__ import annotations

import random
from itertools import combinations

import networkx as nx

from . import families as fam
from .graph import MultiGraph, build_graph


def random_connected_graph(n: int, p: float, rng: random.Random) -> MultiGraph:
    """A uniformly random labelled tree plus each remaining pair with probability ``p``."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < p:
            edges.add((u, v))
    return build_graph(n, sorted(edges), family=("random", n))


def random_graphs(count: int, n_range: tuple[int, int], seed: int, p_range=(0.15, 0.6)) -> list[MultiGraph]:
    rng = random.Random(seed)
    return [random_connected_graph(rng.randint(*n_range), rng.uniform(*p_range), rng) for _ in range(count)]


def from_networkx(g: nx.Graph, family: tuple | None = None) -> MultiGraph:
    nodes = sorted(g.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return build_graph(len(nodes), [(index[u], index[v]) for u, v in g.edges()], family=family)


def connected_atlas(max_n: int, min_n: int = 1) -> list[MultiGraph]:
    """Every connected simple graph on ``min_n..max_n`` vertices, one per isomorphism class."""
    if max_n > 7:
        raise ValueError("the graph atlas only covers n <= 7")
    out = []
    for i, g in enumerate(nx.graph_atlas_g()):
        n = g.number_of_nodes()
        if min_n <= n <= max_n and n > 0 and nx.is_connected(g):
            out.append(from_networkx(g, family=("atlas", i)))
    return out


def trees(n: int) -> list[MultiGraph]:
    if n == 1:
        return [fam.path(1)]
    return [from_networkx(t, family=("tree", n)) for t in nx.nonisomorphic_trees(n)]


def default_corpus() -> list[tuple[str, MultiGraph]]:
    """Small graphs on which every exact solver in the package is feasible."""
    graphs = [
        fam.path(2), fam.path(4), fam.path(6), fam.star(4),
        *[fam.cycle(n) for n in range(3, 9)],
        *[fam.complete(n) for n in range(3, 7)],
        fam.multipartite(2, 3), fam.multipartite(3, 3), fam.multipartite(2, 2, 2), fam.multipartite(1, 2, 3),
        fam.grid(2, 3), fam.grid(2, 5), fam.grid(3, 3), fam.grid(3, 4),
        fam.cylinder(4, 2), fam.cylinder(5, 2),
        fam.rook(2, 3), fam.rook(3, 3),
        fam.petersen(), fam.band(2), fam.multipath(3, 2), fam.multipath(4, 3),
        build_graph(2, [(0, 1, 3)], family=("banana", 3)),
        build_graph(4, [(0, 1, 2), (1, 2), (2, 3, 3), (3, 0)], family=("multicycle", 4)),
    ]
    graphs += random_graphs(12, (5, 9), seed=2024)
    return [(_name(G, i), G) for i, G in enumerate(graphs)]


def _name(G: MultiGraph, i: int) -> str:
    tag = G.family or ("graph",)
    return "-".join(str(x) for x in tag) + (f"-{i}" if tag[0] == "random" else "")

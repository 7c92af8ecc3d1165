"""Sub-cubic leaf embeddings and vertex congestion."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..budget import Budget, unlimited
from ..errors import FeasibilityCapExceeded, InvalidEmbedding, TooSmall
from ..graph import MultiGraph
from .treecut import TreeCutDecomposition

VCON_CAP_N = 8


@dataclass(frozen=True)
class SubcubicEmbedding:
    """Tree links plus an injection from graph vertices to tree leaves."""

    links: tuple[tuple, ...]
    leaf_map: dict = field(hash=False)

    @property
    def nodes(self) -> list:
        seen = dict.fromkeys(self.leaf_map.values())
        for a, b in self.links:
            seen.setdefault(a)
            seen.setdefault(b)
        return list(seen)

    def tree_adjacency(self) -> dict:
        nbrs = {x: [] for x in self.nodes}
        for a, b in self.links:
            nbrs[a].append(b)
            nbrs[b].append(a)
        return nbrs

    def to_json(self) -> dict:
        return {
            "links": [[str(a), str(b)] for a, b in self.links],
            "leaf_map": {str(v): str(x) for v, x in sorted(self.leaf_map.items())},
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SubcubicEmbedding":
        try:
            links = tuple((str(a), str(b)) for a, b in obj["links"])
            leaf_map = {int(v): str(x) for v, x in obj["leaf_map"].items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidEmbedding(f"malformed embedding: {exc}") from exc
        return cls(links, leaf_map)


def _validate(pi: SubcubicEmbedding, G: MultiGraph) -> dict:
    nbrs = pi.tree_adjacency()
    nodes = list(nbrs)
    if len(pi.links) != len(nodes) - 1 or any(a == b for a, b in pi.links):
        raise InvalidEmbedding("links do not form a tree")
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        for y in nbrs[stack.pop()]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != len(nodes):
        raise InvalidEmbedding("tree is disconnected")
    if any(len(ys) > 3 for ys in nbrs.values()):
        raise InvalidEmbedding("tree is not sub-cubic")
    if sorted(pi.leaf_map) != list(range(G.n)):
        raise InvalidEmbedding("leaf map must cover exactly the graph vertices")
    if len(set(pi.leaf_map.values())) != G.n:
        raise InvalidEmbedding("leaf map is not injective")
    for v, x in pi.leaf_map.items():
        if len(nbrs[x]) > 1:
            raise InvalidEmbedding(f"vertex {v} maps to non-leaf node {x}")
    return nbrs


def _path(nbrs: dict, a, b) -> list:
    parent = {a: None}
    stack = [a]
    while stack:
        x = stack.pop()
        if x == b:
            break
        for y in nbrs[x]:
            if y not in parent:
                parent[y] = x
                stack.append(y)
    out = [b]
    while out[-1] != a:
        out.append(parent[out[-1]])
    return out


def node_loads(pi: SubcubicEmbedding, G: MultiGraph) -> dict:
    nbrs = _validate(pi, G)
    load = dict.fromkeys(nbrs, 0)
    for u, v, m in G.edges():
        for x in _path(nbrs, pi.leaf_map[u], pi.leaf_map[v]):
            load[x] += m
    return load


def congestion(pi: SubcubicEmbedding, G: MultiGraph) -> int:
    """Largest number of edge paths (with multiplicity) through one tree node."""
    return max(node_loads(pi, G).values())


def embedding_to_tcd(pi: SubcubicEmbedding, G: MultiGraph) -> TreeCutDecomposition:
    """Each vertex alone in the bag of its leaf; every other bag empty."""
    if G.n < 3:
        raise TooSmall("need at least 3 vertices")
    _validate(pi, G)
    bags = {x: frozenset() for x in pi.nodes}
    for v, x in pi.leaf_map.items():
        bags[x] = frozenset({v})
    return TreeCutDecomposition(pi.links, bags)


def _loads_on(links: list, n_leaves: int, G: MultiGraph) -> int:
    nbrs: dict = {}
    for a, b in links:
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)
    load: dict = {}
    for u, v, m in G.edges():
        if u < n_leaves and v < n_leaves:
            for x in _path(nbrs, u, v):
                load[x] = load.get(x, 0) + m
    return max(load.values(), default=0)


def vertex_congestion_exact(G: MultiGraph, cap: int = VCON_CAP_N,
                            budget: Budget | None = None) -> tuple[int, SubcubicEmbedding]:
    """Minimum congestion over cubic trees with the vertices as labelled leaves.

    Unused leaves and degree-2 nodes never lower congestion, so cubic trees
    whose leaves are exactly the vertices suffice.  Leaves are inserted one
    at a time by subdividing a link; loads at existing nodes never shrink,
    which gives a branch-and-bound cut.
    """
    n = G.n
    if n > cap:
        raise FeasibilityCapExceeded(f"congestion search capped at n={cap}, got {n}")
    budget = budget or unlimited("vcon")
    if n == 1:
        return 0, SubcubicEmbedding((), {0: 0})
    if n == 2:
        return G.num_edges, SubcubicEmbedding(((0, 1),), {0: 0, 1: 1})
    best = [float("inf"), None]

    def grow(links: list, leaf: int, next_node: int) -> None:
        budget.tick()
        c = _loads_on(links, leaf, G)
        if c >= best[0]:
            return
        if leaf == n:
            best[0], best[1] = c, list(links)
            return
        for i, (a, b) in enumerate(links):
            mid = next_node
            new = links[:i] + [(a, mid), (mid, b), (mid, leaf)] + links[i + 1:]
            grow(new, leaf + 1, next_node + 1)

    grow([(0, n), (1, n), (2, n)], 3, n + 1)
    return best[0], SubcubicEmbedding(tuple(best[1]), {v: v for v in range(n)})

"""Tree-cut decompositions, their widths, and exact screewidth."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..bits import bits
from ..budget import Budget, unlimited
from ..errors import FeasibilityCapExceeded, InvalidDecomposition
from ..graph import MultiGraph

SCREEWIDTH_CAP_N = 12


@dataclass(frozen=True)
class TreeCutDecomposition:
    """A tree on hashable nodes plus a bag (possibly empty) at every node."""

    links: tuple[tuple, ...]
    bags: dict = field(hash=False)

    @property
    def nodes(self) -> list:
        seen = dict.fromkeys(self.bags)
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
            "bags": {str(x): sorted(self.bags.get(x, ())) for x in self.nodes},
        }

    @classmethod
    def from_json(cls, obj: dict) -> "TreeCutDecomposition":
        try:
            links = tuple((str(a), str(b)) for a, b in obj["links"])
            bags = {str(k): frozenset(int(v) for v in vs) for k, vs in obj["bags"].items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidDecomposition(f"malformed decomposition: {exc}") from exc
        return cls(links, bags)


def make_tcd(links, bags) -> TreeCutDecomposition:
    return TreeCutDecomposition(tuple(tuple(l) for l in links),
                                {k: frozenset(v) for k, v in bags.items()})


def _locate(T: TreeCutDecomposition, G: MultiGraph) -> dict:
    nodes = T.nodes
    if not nodes:
        raise InvalidDecomposition("decomposition has no nodes")
    for a, b in T.links:
        if a == b:
            raise InvalidDecomposition(f"link ({a},{b}) is a loop")
    if len(set(frozenset(l) for l in T.links)) != len(T.links) or len(T.links) != len(nodes) - 1:
        raise InvalidDecomposition("links do not form a tree")
    nbrs = T.tree_adjacency()
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        x = stack.pop()
        for y in nbrs[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if len(seen) != len(nodes):
        raise InvalidDecomposition("tree is disconnected")
    where = {}
    for x, bag in T.bags.items():
        for v in bag:
            if not 0 <= v < G.n:
                raise InvalidDecomposition(f"bag {x} holds vertex {v} outside 0..{G.n - 1}")
            if v in where:
                raise InvalidDecomposition(f"vertex {v} appears in bags {where[v]} and {x}")
            where[v] = x
    missing = [v for v in range(G.n) if v not in where]
    if missing:
        raise InvalidDecomposition(f"vertices {missing} are in no bag")
    return where


def _label_components(nbrs: dict, removed_node=None, removed_link=None) -> dict:
    label = {}
    for start in nbrs:
        if start == removed_node or start in label:
            continue
        label[start] = start
        stack = [start]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y == removed_node or y in label:
                    continue
                if removed_link is not None and {x, y} == removed_link:
                    continue
                label[y] = start
                stack.append(y)
    return label


def tcd_width(T: TreeCutDecomposition, G: MultiGraph) -> tuple[int, int, int]:
    """Return ``(lw, bw, width)``; edges count with multiplicity."""
    where = _locate(T, G)
    nbrs = T.tree_adjacency()
    edges = G.edges()
    lw = 0
    for a, b in T.links:
        label = _label_components(nbrs, removed_link={a, b})
        adh = sum(m for u, v, m in edges if label[where[u]] != label[where[v]])
        lw = max(lw, adh)
    bw = 0
    for x in T.nodes:
        size = len(T.bags.get(x, ()))
        if len(nbrs[x]) == 1:
            bw = max(bw, size)
            continue
        label = _label_components(nbrs, removed_node=x)
        tunnel = sum(m for u, v, m in edges
                     if where[u] != x and where[v] != x and label[where[u]] != label[where[v]])
        bw = max(bw, size + tunnel)
    return lw, bw, max(lw, bw)


class _ScwTables:
    """Decision tables for "screewidth <= k".

    A subtree hanging below a link carries a vertex set U.  Its top node b
    holds X and its children split W = U - X.  The link above b has
    adhesion d(U); edges tunnelling b number (sum d(child) + d(U) - d(X)) / 2.
    ``best[W]`` is the least sum of boundaries over partitions of W into
    feasible parts, so only boundary sizes ever need to be stored.
    """

    def __init__(self, G: MultiGraph, k: int, budget: Budget):
        self.G = G
        self.k = k
        n = G.n
        size = 1 << n
        delta = [0] * size
        for mask in range(1, size):
            delta[mask] = G.boundary(mask)
        self.delta = delta
        INF = float("inf")
        self.feasible = [False] * size
        self.split = [None] * size  # chosen X for feasible U
        self.best = [INF] * size
        self.best_part = [0] * size
        self.best2 = [INF] * size
        self.best2_part = [0] * size
        self.best[0] = 0
        by_size = sorted(range(1, size), key=lambda m: bin(m).count("1"))
        for U in by_size:
            budget.tick()
            self._fill(U)

    def _fill(self, U: int) -> None:
        delta, best, k = self.delta, self.best, self.k
        low = U & -U
        rest = U ^ low
        # best2: partitions of U into at least two feasible parts
        b2, arg = float("inf"), 0
        sub = rest
        while True:
            P = sub | low
            if P != U and self.feasible[P]:
                val = delta[P] + best[U ^ P]
                if val < b2:
                    b2, arg = val, P
            if sub == 0:
                break
            sub = (sub - 1) & rest
        self.best2[U], self.best2_part[U] = b2, arg
        dU = delta[U]
        if dU <= k:
            if bin(U).count("1") <= k:
                self.feasible[U], self.split[U] = True, U
            else:
                sub = U
                while sub:
                    sub = (sub - 1) & U
                    X = sub
                    W = U ^ X
                    parts = b2 if X == 0 else best[W]
                    if parts == float("inf"):
                        continue
                    if 2 * bin(X).count("1") + parts + dU - delta[X] <= 2 * k:
                        self.feasible[U], self.split[U] = True, X
                        break
        if self.feasible[U] and dU < b2:
            self.best[U], self.best_part[U] = dU, U
        else:
            self.best[U], self.best_part[U] = b2, arg

    def parts(self, W: int, at_least_two: bool = False) -> list[int]:
        out = []
        first = True
        while W:
            P = self.best2_part[W] if (first and at_least_two) else self.best_part[W]
            first = False
            out.append(P)
            W ^= P
        return out

    def root_split(self) -> int | None:
        full = self.G.full_mask
        k = self.k
        for X in range(full + 1):
            W = full ^ X
            if self.best[W] == float("inf"):
                continue
            if 2 * bin(X).count("1") + self.best[W] - self.delta[X] <= 2 * k:
                return X
        return None


def _build_witness(tables: _ScwTables, X_root: int) -> TreeCutDecomposition:
    links, bags = [], {}
    counter = [0]

    def new_node(X: int) -> int:
        node = counter[0]
        counter[0] += 1
        bags[node] = frozenset(bits(X))
        return node

    def grow(U: int) -> int:
        X = tables.split[U]
        node = new_node(X)
        W = U ^ X
        for P in tables.parts(W, at_least_two=(X == 0)):
            links.append((node, grow(P)))
        return node

    root = new_node(X_root)
    for P in tables.parts(tables.G.full_mask ^ X_root):
        links.append((root, grow(P)))
    return TreeCutDecomposition(tuple(links), bags)


def screewidth_decide(G: MultiGraph, k: int, budget: Budget | None = None) -> TreeCutDecomposition | None:
    tables = _ScwTables(G, k, budget or unlimited("screewidth"))
    X = tables.root_split()
    return None if X is None else _build_witness(tables, X)


def screewidth_exact(G: MultiGraph, cap: int = SCREEWIDTH_CAP_N,
                     budget: Budget | None = None) -> tuple[int, TreeCutDecomposition]:
    """Exact screewidth with an optimal decomposition, by binary search on the width."""
    if G.n > cap:
        raise FeasibilityCapExceeded(f"screewidth search capped at n={cap}, got {G.n}")
    budget = budget or unlimited("screewidth")
    lo, hi = 1, G.n
    best = make_tcd([], {0: range(G.n)})
    while lo < hi:
        mid = (lo + hi) // 2
        T = screewidth_decide(G, mid, budget)
        if T is None:
            lo = mid + 1
        else:
            hi, best = mid, T
    return lo, best

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import strategies as st

from scramble_lab.corpus import random_connected_graph
from scramble_lab.graph import MultiGraph


def to_nx(G: MultiGraph) -> nx.MultiGraph:
    H = nx.MultiGraph()
    H.add_nodes_from(range(G.n))
    for u, v in G.edge_copies():
        H.add_edge(u, v)
    return H


def weighted_nx(G: MultiGraph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    for u, v, m in G.edges():
        H.add_edge(u, v, weight=m)
    return H


def multi_edge_connectivity(G: MultiGraph) -> int:
    if G.n < 2:
        return 0
    return nx.stoer_wagner(weighted_nx(G))[0]


def connected_subsets(G: MultiGraph):
    for r in range(1, G.n + 1):
        for c in combinations(range(G.n), r):
            if nx.is_connected(to_nx(G).subgraph(c)):
                yield frozenset(c)


@st.composite
def small_graphs(draw, min_n=2, max_n=7, simple=True):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 10**6))
    p = draw(st.floats(0.0, 0.8))
    rng = random.Random(seed)
    G = random_connected_graph(n, p, rng)
    if simple:
        return G
    from scramble_lab.graph import build_graph
    extra = draw(st.lists(st.integers(0, max(0, G.num_edges - 1)), max_size=3))
    edges = [(u, v, m) for u, v, m in G.edges()]
    for i in extra:
        u, v, m = edges[i]
        edges[i] = (u, v, m + 1)
    return build_graph(n, edges)


_CRITERIA: dict = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    info = _CRITERIA.get(report.nodeid)
    if info is None:
        return
    key, text = info
    entry = _RESULTS.setdefault(key, {"text": text, "passed": 0, "failed": []})
    if report.passed:
        entry["passed"] += 1
    elif report.failed:
        entry["failed"].append(report.nodeid.split("::")[-1])


_RESULTS: dict = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _CRITERIA[item.nodeid] = (str(mark.args[0]), mark.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")

    def order_key(k):
        digits = "".join(ch for ch in k if ch.isdigit())
        return (int(digits), k)

    for key in sorted(_RESULTS, key=order_key):
        entry = _RESULTS[key]
        status = "FAIL" if entry["failed"] else "PASS"
        line = f"{status} criterion {key}: {entry['text']} ({entry['passed']} passed"
        if entry["failed"]:
            line += f", failed: {', '.join(entry['failed'])}"
        tr.write_line(line + ")")


@pytest.fixture
def rng():
    return random.Random(1234)

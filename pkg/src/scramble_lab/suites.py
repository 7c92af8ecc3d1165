"""Check suites: each returns a SuiteReport with one record per check."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import families as fam
from .approx import gavril_2approx, hitting_set_k_approx, scaled_kc_approx
from .chipfiring import dhar_burn, gonality_exact, has_positive_rank, q_reduce
from .corpus import connected_atlas, default_corpus, random_graphs, trees
from .errors import BadParams, FeasibilityCapExceeded, PreconditionViolated
from .fileio import format_graph
from .graph import MultiGraph, cartesian_product, line_graph, smooth_vertex, subdivide_edge
from .hitting import hits_all, min_hitting_set
from .params import alpha_k, edge_connectivity
from .scramble import Scramble, carton_lower_bound, is_disjoint, order, uniform_scramble
from .search.carton import carton_bruteforce
from .search.dsn import dsn_exact
from .search.sandwich import carton_value, sn_interval
from .width.chain import bound_chain_check
from .width.congestion import congestion, embedding_to_tcd, vertex_congestion_exact
from .width.treecut import screewidth_exact, tcd_width
from .width.treewidth import treewidth_exact


@dataclass
class CheckRecord:
    check_id: str
    statement: str
    graphs: list[str]
    passed: bool | None  # None: skipped because a value was out of reach
    values: dict = field(default_factory=dict)
    runtime: float = 0.0
    offending: str | None = None

    def to_json(self) -> dict:
        return {"check": self.check_id, "statement": self.statement, "graphs": self.graphs,
                "passed": self.passed, "values": self.values, "runtime_s": round(self.runtime, 3),
                "offending_graph": self.offending}


@dataclass
class SuiteReport:
    suite: str
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed is not False for r in self.records)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.passed is False]

    def record(self, check_id: str, statement: str) -> "_Recording":
        return _Recording(self, check_id, statement)

    def to_json(self) -> dict:
        return {"schema": 1, "suite": self.suite, "passed": self.passed,
                "checks": [r.to_json() for r in self.records]}


class _Recording:
    """Context manager that times one check and appends its record."""

    def __init__(self, report: SuiteReport, check_id: str, statement: str):
        self.report = report
        self.rec = CheckRecord(check_id, statement, [], None)

    def __enter__(self) -> CheckRecord:
        self.start = time.perf_counter()
        return self.rec

    def __exit__(self, *exc) -> bool:
        self.rec.runtime = time.perf_counter() - self.start
        self.report.records.append(self.rec)
        return False


def _name(G: MultiGraph) -> str:
    return "-".join(str(x) for x in (G.family or ("graph", G.n)))


def _fail_graph(rec: CheckRecord, G: MultiGraph) -> None:
    if rec.passed is False:
        rec.offending = format_graph(G)


# --- named family equalities -------------------------------------------------

def family_cases() -> list[tuple[MultiGraph, int]]:
    cases = [(fam.cycle(n), 2) for n in range(3, 9)]
    cases += [(fam.multipartite(*p), sum(p) - max(p)) for p in [(2, 3), (3, 3), (2, 2, 2)]]
    cases += [(fam.grid(m, n), min(m, n)) for m, n in [(2, 5), (3, 3), (3, 4)]]
    cases += [(fam.cylinder(m, n), min(m, 2 * n)) for m, n in [(4, 2), (6, 2)]]
    return cases


def exact_five(G: MultiGraph) -> dict:
    """dsn, sn, cart, scw and gon from their own solvers (None where out of reach)."""
    vals: dict = {}
    vals["dsn"] = dsn_exact(G)[0]
    sn = sn_interval(G)
    vals["sn"] = int(sn.lower) if sn.exact else None
    if G.n <= 6:
        vals["cart"] = carton_bruteforce(G).cart
    else:
        cart = carton_value(G, sn=sn, use_family=False)
        vals["cart"] = int(cart.lower) if cart.exact else None
    try:
        vals["scw"] = screewidth_exact(G)[0]
    except FeasibilityCapExceeded:
        vals["scw"] = "skipped"
    vals["gon"] = gonality_exact(G, cap=G.n)[0]
    return vals


def suite_families(**_) -> SuiteReport:
    rep = SuiteReport("families")
    start = time.perf_counter()
    for G, expected in family_cases():
        with rep.record(f"five-equal/{_name(G)}", "cart = sn = dsn = scw = gon equals the closed form") as rec:
            rec.graphs = [_name(G)]
            vals = exact_five(G)
            rec.values = {"expected": expected, **vals}
            rec.passed = all(v == expected for k, v in vals.items() if v != "skipped")
            _fail_graph(rec, G)
    total = time.perf_counter() - start
    with rep.record("families/runtime", "whole family suite under 5 minutes") as rec:
        rec.values = {"seconds": round(total, 2)}
        rec.passed = total < 300
    return rep


# --- uniform scrambles --------------------------------------------------------

def suite_uniform(seed: int = 7, count: int = 50, **_) -> SuiteReport:
    rep = SuiteReport("uniform")
    for i, G in enumerate(random_graphs(count, (4, 10), seed=seed)):
        with rep.record(f"uniform-hitting/{i}", "h(eps_k) = n - alpha_{k-1} for k = 2, 3, 4") as rec:
            rec.graphs = [f"random-{i}"]
            ok = True
            for k in (2, 3, 4):
                if k > G.n:
                    continue
                h = min_hitting_set(uniform_scramble(G, k).masks)[0]
                target = G.n - alpha_k(G, k - 1)
                rec.values[f"k={k}"] = [h, target]
                ok &= h == target
            rec.passed = ok
            _fail_graph(rec, G)
    return rep


# --- bipartite-plus-cycle construction ----------------------------------------

def suite_sperner(seed: int = 11, samples: int = 20, **_) -> SuiteReport:
    rep = SuiteReport("sperner")
    start = time.perf_counter()
    G = fam.bipartite_cycle(10)
    eps5 = uniform_scramble(G, 5)
    eps2 = uniform_scramble(G, 2)
    with rep.record("sperner/eps5-size", "|eps_5| = 252") as rec:
        rec.values = {"eggs": len(eps5)}
        rec.passed = len(eps5) == 252
    with rep.record("sperner/eps5-order", "||eps_5|| = 6") as rec:
        r = order(eps5)
        rec.values = {"hitting": r.hitting, "egg_cut": r.egg_cut, "order": r.order}
        rec.passed = r.order == 6
    with rep.record("sperner/eps2-order", "||eps_2|| = 6") as rec:
        r = order(eps2)
        rec.values = {"hitting": r.hitting, "egg_cut": r.egg_cut, "order": r.order}
        rec.passed = r.order == 6
    with rep.record("sperner/eps2-size-45", "|eps_2| = 45") as rec:
        rec.values = {"eggs": len(eps2), "edges": G.num_edges}
        rec.passed = len(eps2) == 45
    with rep.record("sperner/eps2-smaller", "|eps_2| < |eps_5|") as rec:
        rec.values = {"eps2": len(eps2), "eps5": len(eps5)}
        rec.passed = len(eps2) < len(eps5)
    with rep.record("sperner/eps5-deletions", "deleting any one egg of eps_5 drops the order to 5") as rec:
        rng = random.Random(seed)
        picks = rng.sample(range(len(eps5)), samples)
        orders = []
        for i in picks:
            orders.append(order(Scramble(G, eps5.masks[:i] + eps5.masks[i + 1:])).order)
        rec.values = {"sampled": len(picks), "orders": sorted(set(orders))}
        rec.passed = all(o == 5 for o in orders)
    total = time.perf_counter() - start
    with rep.record("sperner/runtime", "construction checks under 2 minutes") as rec:
        rec.values = {"seconds": round(total, 2)}
        rec.passed = total < 120
    return rep


# --- band k-tree --------------------------------------------------------------

def suite_band(k: int = 3, **_) -> SuiteReport:
    rep = SuiteReport("band")
    G = fam.band(k)
    tw = treewidth_exact(G)
    mid = Scramble(G, [1 << v for v in range(k, 3 * k)])
    r = order(mid)
    with rep.record("band/treewidth", "tw = k") as rec:
        rec.values = {"tw": tw, "k": k}
        rec.passed = tw == k
    with rep.record("band/middle-order-exactly-2k-1", "middle 2k verteggs have order exactly 2k-1") as rec:
        rec.values = {"hitting": r.hitting, "egg_cut": r.egg_cut, "order": r.order, "expected": 2 * k - 1}
        rec.passed = r.order == 2 * k - 1
    with rep.record("band/middle-order-at-least-2k-1", "middle 2k verteggs have order >= 2k-1") as rec:
        rec.values = {"order": r.order}
        rec.passed = r.order >= 2 * k - 1
    with rep.record("band/dsn-gap", "dsn >= 2k-1 and dsn - tw >= k-1") as rec:
        d = dsn_exact(G)[0]
        rec.values = {"dsn": d, "tw": tw}
        rec.passed = d >= 2 * k - 1 and d - tw >= k - 1
    return rep


# --- carton lower bound -------------------------------------------------------

def suite_carton_bound(**_) -> SuiteReport:
    rep = SuiteReport("carton-bound")
    R = fam.rook(4, 4)
    with rep.record("carton-bound/rook-shape", "R_{4,4} has 16 vertices and max degree 6") as rec:
        rec.values = {"n": R.n, "max_degree": R.max_degree}
        rec.passed = R.n == 16 and R.max_degree == 6
    with rep.record("carton-bound/rook-value", "3*11 - 16 = 17") as rec:
        rec.values = {"bound": carton_lower_bound(11, R.n, R.max_degree)}
        rec.passed = rec.values["bound"] == 17
    with rep.record("carton-bound/precondition", "max degree >= sn is rejected") as rec:
        try:
            carton_lower_bound(6, 16, 6)
            rec.passed = False
        except PreconditionViolated:
            rec.passed = True
    return rep


# --- gonality -----------------------------------------------------------------

def _gon_check(rep: SuiteReport, G: MultiGraph, expected: int, label: str) -> None:
    with rep.record(f"gonality/{label}", "gonality and a re-verified witness") as rec:
        rec.graphs = [label]
        g, D = gonality_exact(G, cap=max(expected, 1) + 1)
        reduced_ok = True
        for v in range(G.n):
            R = q_reduce(G, D, v)
            reduced_ok &= R[v] >= 1 and not dhar_burn(G, R, v)
        rec.values = {"gon": g, "expected": expected, "witness": list(D.chips)}
        rec.passed = g == expected and D.degree == g and has_positive_rank(G, D) and reduced_ok
        _fail_graph(rec, G)


def suite_gonality(**_) -> SuiteReport:
    rep = SuiteReport("gonality")
    for n in range(1, 9):
        for i, T in enumerate(trees(n)):
            _gon_check(rep, T, 1, f"tree-{n}-{i}")
    for n in range(3, 9):
        _gon_check(rep, fam.cycle(n), 2, f"cycle-{n}")
    for n in range(2, 7):
        _gon_check(rep, fam.complete(n), n - 1, f"complete-{n}")
    _gon_check(rep, fam.multipartite(2, 3), 2, "multipartite-2-3")
    return rep


# --- congestion chain ---------------------------------------------------------

def suite_congestion(max_n: int = 6, **_) -> SuiteReport:
    rep = SuiteReport("congestion")
    start = time.perf_counter()
    for G in connected_atlas(max_n, min_n=2):
        with rep.record(f"congestion/{_name(G)}", "vcon = tw(L)+1, scw <= vcon, tw(L) >= tw-1, tcd width = congestion") as rec:
            rec.graphs = [_name(G)]
            vcon, pi = vertex_congestion_exact(G)
            twl = treewidth_exact(line_graph(G))
            tw = treewidth_exact(G)
            rec.values = {"vcon": vcon, "tw_line": twl, "tw": tw}
            ok = vcon == twl + 1 and twl >= tw - 1 and congestion(pi, G) == vcon
            if G.n >= 3:
                scw = screewidth_exact(G)[0]
                width = tcd_width(embedding_to_tcd(pi, G), G)[2]
                rec.values.update(scw=scw, tcd_width=width)
                ok &= scw <= vcon and width == vcon
            rec.passed = ok
            _fail_graph(rec, G)
    total = time.perf_counter() - start
    with rep.record("congestion/runtime", "exhaustive congestion suite under 30 minutes") as rec:
        rec.values = {"seconds": round(total, 2)}
        rec.passed = total < 1800
    return rep


# --- bound sandwich -----------------------------------------------------------

def _require(corpus):
    corpus = list(default_corpus() if corpus is None else corpus)
    if not corpus:
        raise BadParams("empty corpus")
    return corpus


def suite_chain(corpus=None, **_) -> SuiteReport:
    rep = SuiteReport("chain")
    for name, G in _require(corpus):
        with rep.record(f"chain/{name}", "tw <= sn <= min(scw, gon), sn <= (tw+1)D-1, scw <= vcon, tw(L) >= tw-1") as rec:
            rec.graphs = [name]
            sn = sn_interval(G)
            if not sn.exact:
                rec.values = {"sn": [sn.lower, sn.upper]}
                continue
            known = {"sn": sn}
            if G.n > 8:
                known["vcon"] = None
            if line_graph(G).n > 18:
                known["tw_line"] = None
            chain = bound_chain_check(G, known)
            rec.values = {c.name: c.passed for c in chain.checks}
            rec.values["sn"] = int(sn.lower)
            rec.passed = chain.passed
            _fail_graph(rec, G)
    return rep


# --- approximations -----------------------------------------------------------

def _random_set_system(rng: random.Random, k: int):
    n = rng.randint(4, 12)
    count = rng.randint(3, 15)
    return n, [rng.sample(range(n), rng.randint(1, k)) for _ in range(count)]


def suite_approx(seed: int = 5, **_) -> SuiteReport:
    rep = SuiteReport("approx")
    rng = random.Random(seed)
    bad = []
    for i in range(200):
        k = 2 + i % 2
        n, sets = _random_set_system(rng, k)
        res = hitting_set_k_approx(sets, k)
        masks = [sum(1 << v for v in s) for s in sets]
        opt = min_hitting_set(masks)[0]
        if not (res.within(opt) and hits_all(sum(1 << v for v in res.witness), masks)):
            bad.append({"sets": sets, "value": res.value, "opt": opt})
    with rep.record("approx/k-hitting-set", "local-ratio value within factor k of the exact hitting number") as rec:
        rec.values = {"instances": 200, "violations": bad}
        rec.passed = not bad
    bad = []
    for i, G in enumerate(random_graphs(100, (2, 12), seed=seed + 1)):
        res = gavril_2approx(G)
        opt = G.n - alpha_k(G, 1)
        cover = sum(1 << v for v in res.witness)
        covers = all((cover >> u) & 1 or (cover >> v) & 1 for u, v, _ in G.edges())
        if not (res.within(opt) and covers):
            bad.append({"graph": format_graph(G), "value": res.value, "opt": opt})
    with rep.record("approx/gavril", "matching cover within factor 2 of n - alpha") as rec:
        rec.values = {"instances": 100, "violations": bad}
        rec.passed = not bad
    accepted, bad = 0, []
    pool = [G for _, G in default_corpus()] + random_graphs(40, (4, 10), seed=seed + 2, p_range=(0.5, 0.95))
    for G in pool:
        for k in (1, 2):
            for c in (Fraction(3, 2), Fraction(2), Fraction(3)):
                try:
                    res = scaled_kc_approx(G, k, c)
                except PreconditionViolated:
                    continue
                accepted += 1
                a, ak = alpha_k(G, 1), alpha_k(G, k)
                n = G.n
                ok = Fraction(n - a) / c <= n - ak <= n - a
                ok &= Fraction(n - ak, k + 1) <= res.value <= n - ak
                if not ok:
                    bad.append({"graph": format_graph(G), "k": k, "c": str(c)})
    with rep.record("approx/kc-chain", "every accepted kc input satisfies (n-alpha)/c <= n-alpha_k <= n-alpha") as rec:
        rec.values = {"accepted": accepted, "violations": bad}
        rec.passed = not bad and accepted > 0
    return rep


# --- subdivision invariance ---------------------------------------------------

def _dsn_cart(G: MultiGraph):
    d = dsn_exact(G)[0]
    cart = carton_value(G, use_family=False)
    return d, (int(cart.lower) if cart.exact else None)


def suite_invariance(corpus=None, seed: int = 3, steps: int = 3, **_) -> SuiteReport:
    rep = SuiteReport("invariance")
    rng = random.Random(seed)
    for name, G in _require(corpus):
        if G.n > 8 or G.num_edges == 0:
            continue
        with rep.record(f"invariance/{name}", "dsn and cart unchanged by subdivision; smoothing restores the graph") as rec:
            rec.graphs = [name]
            base = _dsn_cart(G)
            if base[1] is None:
                rec.values = {"skipped": "cart not pinned"}
                continue
            chain = [G]
            seen = [base]
            for _ in range(steps):
                H = chain[-1]
                u, w, _m = rng.choice(H.edges())
                H2 = subdivide_edge(H, u, w)
                chain.append(H2)
                seen.append(_dsn_cart(H2))
            back = chain[-1]
            for _ in range(steps):
                back = smooth_vertex(back, back.n - 1)
            pinned = [s for s in seen if s[1] is not None]
            rec.values = {"dsn_cart": [list(s) for s in seen]}
            rec.passed = (all(s[0] == base[0] for s in seen)
                          and all(s[1] == base[1] for s in pinned)
                          and back == G and _dsn_cart(back) == base)
            _fail_graph(rec, G)
    return rep


# --- exhaustive brute force ---------------------------------------------------

def suite_bruteforce(max_n: int = 5, **_) -> SuiteReport:
    rep = SuiteReport("bruteforce")
    for G in connected_atlas(max_n):
        with rep.record(f"bruteforce/{_name(G)}", "brute-force cart/sn agree with dsn and the sandwich") as rec:
            rec.graphs = [_name(G)]
            res = carton_bruteforce(G)
            d = dsn_exact(G)[0]
            sn = sn_interval(G)
            disjoint = is_disjoint(res.witness)
            w = order(res.witness)
            ok = w.order == res.sn and len(res.witness) == res.cart and res.cart >= res.sn
            ok &= (res.cart == res.sn) == disjoint == (d == res.sn)
            if sn.exact:
                ok &= sn.lower == res.sn
            else:
                ok &= sn.lower <= res.sn <= sn.upper
            rec.values = {"cart": res.cart, "sn": res.sn, "dsn": d, "disjoint_witness": disjoint,
                          "sandwich": [sn.lower, sn.upper]}
            rec.passed = ok
            _fail_graph(rec, G)
    return rep


# --- Cartesian product table --------------------------------------------------

def table1_cases() -> list[tuple[str, MultiGraph, MultiGraph, bool, int]]:
    """(row label, G, H, assumptions hold, predicted cart(G □ H))."""
    out = []
    for T, H in [(fam.path(2), fam.cycle(4)), (fam.path(3), fam.cycle(4)), (fam.path(2), fam.multipartite(2, 3))]:
        k = edge_connectivity(H)
        ok = gonality_exact(H, cap=H.n)[0] == k
        out.append(("tree x H, gon(H) = lambda(H)", T, H, ok, min(H.n, k * T.n)))
    for l, (m, n) in [(2, (2, 2)), (3, (2, 2))]:
        out.append(("path x grid", fam.path(l), fam.grid(m, n), l >= m * n / 2, m * n))
    for G, l, T in [(fam.path(2), 2, fam.path(2)), (fam.path(2), 3, fam.path(2))]:
        H = cartesian_product(fam.complete(l), T)
        out.append(("G x (K_l x T)", G, H, G.n <= T.n and T.n >= 2, l * G.n))
    for G, H in [(fam.path(2), fam.cycle(5)), (fam.path(2), fam.cycle(6))]:
        ok = edge_connectivity(H) == 2 and gonality_exact(H, cap=H.n)[0] == 2 and G.n <= H.n / 2
        out.append(("G x H, gon(H) = lambda(H) = 2", G, H, ok, 2 * G.n))
    for G, (m, n) in [(fam.path(2), (2, 2)), (fam.path(2), (2, 3))]:
        out.append(("G x K_{m,n}", G, fam.multipartite(m, n), G.n <= (m + n) / m and m <= n, m * G.n))
    return out


def suite_table1(**_) -> SuiteReport:
    rep = SuiteReport("table1")
    for row, G, H, assumed, expected in table1_cases():
        P = cartesian_product(G, H)
        label = f"{row} [{_name(G)} x {_name(H)}]"
        with rep.record(f"table1/{label}", "dsn = sn = cart = gon of the product equals the row value") as rec:
            rec.graphs = [label]
            if not assumed:
                rec.values = {"skipped": "row assumptions fail"}
                continue
            d = dsn_exact(P)[0]
            sn = sn_interval(P)
            cart = carton_value(P, sn=sn, use_family=False)
            g = gonality_exact(P, cap=expected)[0]
            rec.values = {"expected": expected, "dsn": d, "sn": [sn.lower, sn.upper],
                          "cart": [cart.lower, cart.upper], "gon": g}
            rec.passed = (d == expected and sn.exact and sn.lower == expected
                          and cart.exact and cart.lower == expected and g == expected)
            _fail_graph(rec, P)
    return rep


SUITES = {
    "families": suite_families,
    "uniform": suite_uniform,
    "sperner": suite_sperner,
    "band": suite_band,
    "carton-bound": suite_carton_bound,
    "gonality": suite_gonality,
    "congestion": suite_congestion,
    "chain": suite_chain,
    "approx": suite_approx,
    "invariance": suite_invariance,
    "bruteforce": suite_bruteforce,
    "table1": suite_table1,
}


def run_suite(name: str, **kwargs) -> SuiteReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise BadParams(f"unknown suite {name!r}; known: {sorted(SUITES)}") from None
    return fn(**kwargs)

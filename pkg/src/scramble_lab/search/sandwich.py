"""Certified intervals for the scramble number and the carton number."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..budget import Budget
from ..chipfiring import Divisor, gonality_exact, has_positive_rank
from ..errors import CapExceeded, FeasibilityCapExceeded
from ..graph import MultiGraph
from ..params import alpha_k_witness
from ..scramble import (Scramble, carton_lower_bound, order, uniform_scramble,
                        vertegg_scramble)
from ..width.treecut import screewidth_exact
from ..width.treewidth import treewidth_exact
from .dsn import dsn_exact

INF = math.inf


@dataclass
class InvariantInterval:
    lower: float
    upper: float
    lower_witness: object = None
    upper_witness: object = None
    skipped: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"empty interval [{self.lower}, {self.upper}]")

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def to_json(self) -> dict:
        def enc(x):
            return "inf" if x == INF else int(x)

        return {"lower": enc(self.lower), "upper": enc(self.upper), "exact": self.exact,
                "lower_witness": _describe(self.lower_witness),
                "upper_witness": _describe(self.upper_witness), "skipped": dict(self.skipped)}


def _describe(w):
    if w is None:
        return None
    label, obj = w
    if isinstance(obj, Scramble):
        return {"kind": label, "eggs": [list(e) for e in obj.eggs]}
    if isinstance(obj, Divisor):
        return {"kind": label, "chips": list(obj.chips)}
    if hasattr(obj, "to_json"):
        return {"kind": label, **obj.to_json()}
    return {"kind": label, "value": obj}


@dataclass
class SearchCaps:
    """Size limits for the exact solvers consulted by the sandwich."""

    tw_n: int = 18
    scw_n: int = 12
    dsn_n: int = 12
    gon_n: int = 12
    gon_degree: int = 8
    alpha_n: int = 20
    uniform_k: int = 5
    uniform_eggs: int = 3000
    budget_ms: float | None = None

    def budget(self, label: str) -> Budget:
        return Budget.from_env(label=label) if self.budget_ms is None else Budget(ms=self.budget_ms, label=label)


def product_copy_scrambles(G: MultiGraph) -> list[tuple[str, Scramble]]:
    """Scrambles of factor copies for graphs tagged as Cartesian products."""
    tag = G.family or ()
    if not tag or tag[0] not in ("grid", "cylinder", "rook", "product"):
        return []
    ng, nh = tag[1], tag[2]
    if ng * nh != G.n:
        return []
    first = [sum(1 << (g * nh + h) for g in range(ng)) for h in range(nh)]
    second = [sum(1 << (g * nh + h) for h in range(nh)) for g in range(ng)]
    return [("copies-of-first-factor", Scramble(G, first)),
            ("copies-of-second-factor", Scramble(G, second))]


def band_middle_scramble(G: MultiGraph) -> Scramble | None:
    tag = G.family or ()
    if not tag or tag[0] != "band":
        return None
    k = tag[1]
    return Scramble(G, [1 << v for v in range(k, 3 * k)])


def catalog_scrambles(G: MultiGraph, caps: SearchCaps | None = None) -> list[tuple[str, Scramble]]:
    caps = caps or SearchCaps()
    out = [("verteggs", vertegg_scramble(G))]
    for k in range(2, min(caps.uniform_k, G.n) + 1):
        if math.comb(G.n, k) > caps.uniform_eggs:
            break
        out.append((f"uniform-{k}", uniform_scramble(G, k)))
    out += product_copy_scrambles(G)
    mid = band_middle_scramble(G)
    if mid is not None:
        out.append(("band-middle-verteggs", mid))
    return out


def complement_of_independent_divisor(G: MultiGraph) -> Divisor | None:
    """One chip on every vertex outside a maximum independent set, if it has positive rank."""
    _, indep = alpha_k_witness(G, 1)
    chips = tuple(0 if (indep >> v) & 1 else 1 for v in range(G.n))
    D = Divisor(chips)
    return D if has_positive_rank(G, D) else None


def sn_interval(G: MultiGraph, caps: SearchCaps | None = None) -> InvariantInterval:
    """Lower and upper bounds on sn(G), each with a certificate.

    Lower: treewidth, dsn, and the best order among catalog scrambles.
    Upper: screewidth, gonality, the degree bound (tw+1)D-1, the vertex
    count, and a verified positive-rank divisor on the complement of a
    maximum independent set.
    """
    caps = caps or SearchCaps()
    skipped = {}
    lower, lower_w = 1, ("single-egg", Scramble(G, [G.full_mask]))
    upper, upper_w = G.n, ("vertex-count", G.n)

    def raise_lower(val, w):
        nonlocal lower, lower_w
        if val > lower:
            lower, lower_w = val, w

    def drop_upper(val, w):
        nonlocal upper, upper_w
        if val < upper:
            upper, upper_w = val, w

    tw = None
    if G.n <= caps.tw_n:
        try:
            tw = treewidth_exact(G, budget=caps.budget("treewidth"))
            raise_lower(tw, ("treewidth", tw))
        except FeasibilityCapExceeded as exc:
            skipped["tw"] = str(exc)
    else:
        skipped["tw"] = f"n={G.n} above cap {caps.tw_n}"
    if tw is not None and G.num_edges:
        # the degree bound is vacuous (and false) on the one-vertex graph
        drop_upper((tw + 1) * G.max_degree - 1, ("degree-bound", (tw + 1) * G.max_degree - 1))

    for label, S in catalog_scrambles(G, caps):
        try:
            raise_lower(order(S, caps.budget("hitting")).order, (label, S))
        except FeasibilityCapExceeded as exc:
            skipped[label] = str(exc)

    if G.n <= caps.dsn_n:
        try:
            d, S = dsn_exact(G, cap=caps.dsn_n, budget=caps.budget("dsn"))
            raise_lower(d, ("dsn-partition", S))
        except FeasibilityCapExceeded as exc:
            skipped["dsn"] = str(exc)
    else:
        skipped["dsn"] = f"n={G.n} above cap {caps.dsn_n}"

    if G.is_simple and G.n <= caps.alpha_n:
        try:
            D = complement_of_independent_divisor(G)
            if D is not None:
                drop_upper(D.degree, ("divisor", D))
        except FeasibilityCapExceeded as exc:
            skipped["independent-divisor"] = str(exc)

    if lower < upper and G.n <= caps.scw_n:
        try:
            w, T = screewidth_exact(G, cap=caps.scw_n, budget=caps.budget("screewidth"))
            drop_upper(w, ("screewidth", T))
        except FeasibilityCapExceeded as exc:
            skipped["scw"] = str(exc)
    elif lower < upper:
        skipped["scw"] = f"n={G.n} above cap {caps.scw_n}"

    if lower < upper and G.n <= caps.gon_n:
        try:
            cap = min(caps.gon_degree, int(upper) - 1)
            if cap >= 1:
                g, D = gonality_exact(G, cap=cap, budget=caps.budget("gonality"))
                drop_upper(g, ("divisor", D))
        except CapExceeded:
            pass  # no divisor below the current upper bound
        except FeasibilityCapExceeded as exc:
            skipped["gon"] = str(exc)
    elif lower < upper:
        skipped["gon"] = f"n={G.n} above cap {caps.gon_n}"

    return InvariantInterval(lower, upper, lower_w, upper_w, skipped)


def carton_value(G: MultiGraph, sn: InvariantInterval | int | None = None,
                 caps: SearchCaps | None = None, use_family: bool = True) -> InvariantInterval:
    """cart(G) exactly when the theory pins it, otherwise a certified interval.

    * dsn = sn (both pinned) gives cart = sn;
    * a recognised family tag gives its closed form;
    * tiny graphs fall back on exhaustive search;
    * otherwise [max(sn, 3sn - n when D < sn), inf).
    """
    from .carton import CARTON_BRUTE_CAP_N, carton_bruteforce

    caps = caps or SearchCaps()
    if use_family:
        formula = family_carton(G)
        if formula is not None:
            return InvariantInterval(formula, formula, ("family-formula", G.family), ("family-formula", G.family))
    if sn is None:
        sn = sn_interval(G, caps)
    if isinstance(sn, int):
        sn = InvariantInterval(sn, sn, ("supplied", sn), ("supplied", sn))
    skipped = dict(sn.skipped)
    if sn.exact and G.n <= caps.dsn_n:
        try:
            d, S = dsn_exact(G, cap=caps.dsn_n, budget=caps.budget("dsn"))
            if d == sn.lower:
                # the partition witness has exactly sn eggs
                return InvariantInterval(d, d, ("dsn-equals-sn", S), ("disjoint-scramble", S), skipped)
        except FeasibilityCapExceeded as exc:
            skipped["dsn"] = str(exc)
    if G.n <= CARTON_BRUTE_CAP_N:
        res = carton_bruteforce(G)
        return InvariantInterval(res.cart, res.cart, ("bruteforce", res.witness), ("bruteforce", res.witness), skipped)
    lo = sn.lower
    lower, lower_w = lo, ("sn-lower", lo)
    if G.max_degree < lo:
        b = carton_lower_bound(int(lo), G.n, G.max_degree)
        if b > lower:
            lower, lower_w = b, ("3sn-n", b)
    return InvariantInterval(lower, INF, lower_w, None, skipped)


def family_carton(G: MultiGraph) -> int | None:
    tag = G.family or ()
    if not tag:
        return None
    name = tag[0]
    if name == "cycle":
        return 2
    if name == "multipartite":
        parts = tag[1:]
        return sum(parts) - max(parts)
    if name == "grid":
        return min(tag[1], tag[2])
    if name == "cylinder":
        return min(tag[1], 2 * tag[2])
    if name in ("path", "star"):
        return 1
    return None

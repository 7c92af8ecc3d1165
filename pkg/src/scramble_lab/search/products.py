"""Cartesian-product scrambles and the five-invariant equality check."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..chipfiring import gonality_exact
from ..errors import CapExceeded, FeasibilityCapExceeded
from ..graph import MultiGraph, cartesian_product
from ..params import edge_connectivity
from ..scramble import Scramble, order
from ..width.treecut import screewidth_exact
from .dsn import dsn_exact
from .sandwich import SearchCaps, carton_value, sn_interval


@dataclass
class ProductBound:
    order: int
    bound: int
    scramble: Scramble

    @property
    def holds(self) -> bool:
        return self.order >= self.bound


def dsn_cartesian_lower(G: MultiGraph, H: MultiGraph) -> ProductBound:
    """Order of the scramble whose eggs are the copies ``G x {h}`` in ``G □ H``.

    The guaranteed value is ``min(|V(H)|, |V(G)| * lambda(H))``.
    """
    P = cartesian_product(G, H)
    nh = H.n
    eggs = [sum(1 << (g * nh + h) for g in range(G.n)) for h in range(nh)]
    S = Scramble(P, eggs)
    lam = edge_connectivity(H) if H.n > 1 else 0
    bound = min(H.n, G.n * lam) if H.n > 1 else 1
    return ProductBound(order(S).order, bound, S)


@dataclass
class FiveInvariantReport:
    k: int
    applies: bool
    values: dict = field(default_factory=dict)
    skipped: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.applies or all(v == self.k for v in self.values.values())

    def to_json(self) -> dict:
        return {"k": self.k, "applies": self.applies, "passed": self.passed,
                "values": self.values, "skipped": self.skipped}


def five_invariant_check(G: MultiGraph, caps: SearchCaps | None = None) -> FiveInvariantReport:
    """For G with gon(G) = lambda(G) = k, compute dsn, sn, cart, scw and gon and compare with k."""
    caps = caps or SearchCaps()
    k = edge_connectivity(G) if G.n > 1 else 0
    if G.n == 1:
        return FiveInvariantReport(0, False)
    try:
        gon, _ = gonality_exact(G, cap=max(k, 1), budget=caps.budget("gonality"))
    except CapExceeded:  # gonality above lambda
        return FiveInvariantReport(k, False)
    if gon != k:
        return FiveInvariantReport(k, False, {"gon": gon})
    rep = FiveInvariantReport(k, True, {"gon": gon})
    try:
        rep.values["dsn"] = dsn_exact(G, cap=caps.dsn_n, budget=caps.budget("dsn"))[0]
    except FeasibilityCapExceeded as exc:
        rep.skipped["dsn"] = str(exc)
    sn = sn_interval(G, caps)
    if sn.exact:
        rep.values["sn"] = int(sn.lower)
    else:
        rep.skipped["sn"] = f"interval [{sn.lower}, {sn.upper}]"
    cart = carton_value(G, sn=sn, caps=caps, use_family=False)
    if cart.exact:
        rep.values["cart"] = int(cart.lower)
    else:
        rep.skipped["cart"] = f"interval [{cart.lower}, {cart.upper}]"
    try:
        rep.values["scw"] = screewidth_exact(G, cap=caps.scw_n, budget=caps.budget("screewidth"))[0]
    except FeasibilityCapExceeded as exc:
        rep.skipped["scw"] = str(exc)
    return rep

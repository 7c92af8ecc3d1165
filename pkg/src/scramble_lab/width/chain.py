"""Inequality chain linking treewidth, scramble number, screewidth, gonality and congestion."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import FeasibilityCapExceeded, MissingInvariant
from ..graph import MultiGraph, line_graph


@dataclass
class ChainCheck:
    name: str
    passed: bool | None  # None when skipped
    values: dict

    def to_json(self) -> dict:
        return {"check": self.name, "passed": self.passed, "values": self.values}


@dataclass
class ChainReport:
    checks: list[ChainCheck] = field(default_factory=list)
    skipped: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def failures(self) -> list[ChainCheck]:
        return [c for c in self.checks if c.passed is False]

    def to_json(self) -> dict:
        return {"passed": self.passed, "checks": [c.to_json() for c in self.checks],
                "skipped": self.skipped}


def _as_interval(value) -> tuple[float, float]:
    if hasattr(value, "lower") and hasattr(value, "upper"):
        return value.lower, value.upper
    if isinstance(value, (tuple, list)):
        return value[0], value[1]
    return value, value


def _compute(G: MultiGraph, key: str):
    from .congestion import vertex_congestion_exact
    from .treecut import screewidth_exact
    from .treewidth import treewidth_exact
    from ..chipfiring import gonality_exact

    if key == "tw":
        return treewidth_exact(G)
    if key == "tw_line":
        return treewidth_exact(line_graph(G))
    if key == "scw":
        return screewidth_exact(G)[0]
    if key == "vcon":
        return vertex_congestion_exact(G)[0]
    if key == "gon":
        return gonality_exact(G, cap=G.n)[0]
    if key == "sn":
        from ..search.sandwich import sn_interval
        return sn_interval(G)
    raise MissingInvariant(key)


def bound_chain_check(G: MultiGraph, invariants: dict | None = None, compute: bool = True) -> ChainReport:
    """Evaluate each inequality whose inputs are known.

    ``invariants`` may hold ``tw``, ``tw_line``, ``sn`` (number or interval),
    ``scw``, ``gon`` and ``vcon``.  Missing values are computed when
    ``compute`` is true (and skipped if too large); otherwise a check that
    needs them raises ``MissingInvariant``.
    """
    known = dict(invariants or {})
    report = ChainReport()
    delta = G.max_degree

    def get(key):
        if key not in known:
            if not compute:
                raise MissingInvariant(key)
            try:
                known[key] = _compute(G, key)
            except FeasibilityCapExceeded as exc:
                known[key] = None
                report.skipped[key] = str(exc)
        return known[key]

    def check(name, keys, test):
        vals = [get(k) for k in keys]
        if any(v is None for v in vals):
            report.checks.append(ChainCheck(name, None, {}))
            return
        passed, shown = test(*vals)
        report.checks.append(ChainCheck(name, passed, shown))

    def tw_le_sn(tw, sn):
        lo, hi = _as_interval(sn)
        return tw <= hi, {"tw": tw, "sn": [lo, hi]}

    def sn_le(other_name):
        def test(sn, other):
            lo, hi = _as_interval(sn)
            return lo <= other, {"sn": [lo, hi], other_name: other}
        return test

    def sn_degree(sn, tw):
        lo, hi = _as_interval(sn)
        bound = (tw + 1) * delta - 1
        return lo <= bound, {"sn": [lo, hi], "tw": tw, "max_degree": delta, "bound": bound}

    check("tw<=sn", ["tw", "sn"], tw_le_sn)
    check("sn<=gon", ["sn", "gon"], sn_le("gon"))
    check("sn<=scw", ["sn", "scw"], sn_le("scw"))
    if G.num_edges:
        check("sn<=(tw+1)D-1", ["sn", "tw"], sn_degree)
    if G.n >= 3:
        check("scw<=vcon", ["scw", "vcon"], lambda s, v: (s <= v, {"scw": s, "vcon": v}))
    if G.num_edges >= 1:
        check("tw(L)>=tw-1", ["tw_line", "tw"],
              lambda tl, tw: (tl >= tw - 1, {"tw_line": tl, "tw": tw}))
        check("tw(L)<=(tw+1)D-1", ["tw_line", "tw"],
              lambda tl, tw: (tl <= (tw + 1) * delta - 1,
                              {"tw_line": tl, "tw": tw, "max_degree": delta}))
    return report

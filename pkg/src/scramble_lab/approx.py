"""Polynomial-time approximations for hitting numbers, n - alpha_k, sn and gon."""
from __future__ import annotations

from dataclasses import dataclass, field

from .bits import bits, mask_of
from .errors import BadParams, NoCaseMatches, NotSimple, PreconditionViolated, SetTooLarge
from .graph import MultiGraph
from .params import alpha_k, enumerate_connected_subgraphs, girth, lambda_k, xi_k


@dataclass
class ApproxResult:
    value: float
    factor: float
    direction: str  # "min": OPT <= value <= factor*OPT; "max": OPT/factor <= value <= OPT
    witness: tuple = ()
    case: int | None = None
    details: dict = field(default_factory=dict)

    def within(self, opt: float) -> bool:
        if self.direction == "min":
            return opt <= self.value <= self.factor * opt
        return opt / self.factor <= self.value <= opt

    def to_json(self) -> dict:
        return {"value": self.value, "factor": self.factor, "direction": self.direction,
                "witness": [list(w) if isinstance(w, tuple) else w for w in self.witness],
                "case": self.case, "details": self.details}


def hitting_set_k_approx(sets, k: int) -> ApproxResult:
    """Take every vertex of the first set (in lexicographic order) not yet hit; repeat."""
    family = sorted(tuple(sorted(s)) for s in sets)
    for s in family:
        if len(s) > k:
            raise SetTooLarge(f"set {s} has more than {k} elements")
    chosen = 0
    for s in family:
        m = mask_of(s)
        if not m & chosen:
            chosen |= m
    hit = bits(chosen)
    return ApproxResult(len(hit), k, "min", hit)


def approx_n_minus_alpha(G: MultiGraph, k: int) -> ApproxResult:
    """k-approximate n - alpha_{k-1}(G) through the k-uniform scramble."""
    if not 1 <= k <= G.n:
        raise BadParams(f"k={k} outside 1..{G.n}")
    res = hitting_set_k_approx(enumerate_connected_subgraphs(G, k), k)
    res.details["target"] = f"n-alpha_{k - 1}"
    return res


def gavril_2approx(G: MultiGraph) -> ApproxResult:
    """Both ends of a greedy maximal matching form a vertex cover of size <= 2(n - alpha)."""
    if not G.is_simple:
        raise NotSimple("Gavril's algorithm needs a simple graph")
    covered = 0
    matching = []
    for u, v, _ in G.edges():
        if not (covered >> u) & 1 and not (covered >> v) & 1:
            covered |= (1 << u) | (1 << v)
            matching.append((u, v))
    res = ApproxResult(2 * len(matching), 2, "min", bits(covered))
    res.details["matching"] = [list(e) for e in matching]
    return res


def _case_conditions(G: MultiGraph) -> list[tuple[int, int, float]]:
    """(case, uniform-scramble size k, factor) for every case whose hypotheses hold."""
    n = G.n
    g = girth(G)
    dmin = G.min_degree
    out = []
    if g >= 4 and dmin >= 3 and n >= 3 and xi_k(G, 3) >= n + 1:
        out.append((1, 3, 3))
    if g >= 4 and n >= 6 and dmin >= n / 3 + 1:
        out.append((2, 3, 3))
    if g >= 5 and n >= 8 and dmin >= ((n // 2) + 4) / 2:
        out.append((3, 4, 4))
    deg = G.degrees
    ok = True
    for u in range(n):
        for v in range(u + 1, n):
            need = n if G.multiplicity(u, v) else n + 1
            if deg[u] + deg[v] < need:
                ok = False
                break
        if not ok:
            break
    if ok:
        out.append((4, 2, 2))
    return out


def family_gon_sn_approx(G: MultiGraph) -> ApproxResult:
    """Constant-factor approximation of sn and gon on the four structured families.

    Cases are tried in order; the first whose hypotheses hold decides which
    uniform scramble is approximated.
    """
    if not G.is_simple:
        raise NotSimple("family approximation needs a simple graph")
    cases = _case_conditions(G)
    if not cases:
        raise NoCaseMatches("graph satisfies none of the four family conditions")
    case, k, factor = cases[0]
    res = approx_n_minus_alpha(G, k)
    res.factor = factor
    res.case = case
    return res


def scaled_kc_approx(G: MultiGraph, k: int, c: float) -> ApproxResult:
    """(k+1)c-approximation of sn and gon: a (k+1)-hitting-set approximation divided by k+1."""
    if k < 1 or not c > 1:
        raise BadParams("need k >= 1 and c > 1")
    n = G.n
    a = alpha_k(G, 1)
    ak = alpha_k(G, k)
    if a * (k * c - 1) > (c - 1) * n:
        raise PreconditionViolated(f"alpha={a} exceeds (c-1)n/(kc-1)")
    lam = lambda_k(G, k + 1) if 2 * (k + 1) <= n else None
    if lam is None or lam < n - ak:
        raise PreconditionViolated(f"lambda_{k + 1}={lam} is below n - alpha_{k}={n - ak}")
    base = approx_n_minus_alpha(G, k + 1)
    value = base.value / (k + 1)
    chain = ((n - a) / c <= n - ak <= n - a)
    details = {"n_minus_alpha": n - a, f"n_minus_alpha_{k}": n - ak, f"lambda_{k + 1}": lam,
               "hitting_approx": base.value, "c_chain_holds": chain}
    return ApproxResult(value, (k + 1) * c, "max", base.witness, None, details)

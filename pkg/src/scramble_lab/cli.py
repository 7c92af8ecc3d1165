"""Command-line interface.

Exit codes: 0 success, 1 a check failed (or a solver/validation error),
2 usage or parse error.
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import fileio
from .approx import approx_n_minus_alpha, family_gon_sn_approx, gavril_2approx, scaled_kc_approx
from .budget import ENV_BUDGET_MS
from .chipfiring import gonality_exact, has_positive_rank
from .errors import BadParams, FeasibilityCapExceeded, ParseError, ScrambleLabError
from .families import FAMILIES, generate_family
from .scramble import order
from .search.dsn import dsn_exact
from .search.sandwich import SearchCaps, carton_value, sn_interval
from .suites import SUITES, run_suite
from .width.congestion import congestion, embedding_to_tcd
from .width.treecut import screewidth_exact, tcd_width
from .width.treewidth import treewidth_exact

INVARIANTS = ("tw", "dsn", "sn", "cart", "scw", "gon")


class CheckFailed(Exception):
    pass


def _emit(obj, out: str | None = None) -> None:
    text = fileio.dumps({"schema": fileio.SCHEMA_VERSION, **obj})
    if out:
        Path(out).write_text(text + "\n")
    print(text)


def cmd_gen(args) -> None:
    G = generate_family(args.family, *args.params)
    text = fileio.format_graph(G)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args) -> None:
    G = fileio.load_graph(args.graph)
    wanted = args.only.split(",") if args.only else list(INVARIANTS)
    unknown = set(wanted) - set(INVARIANTS)
    if unknown:
        raise BadParams(f"unknown invariants {sorted(unknown)}; choose from {INVARIANTS}")
    caps = SearchCaps(budget_ms=args.budget_ms)
    witness_dir = Path(args.witness_dir) if args.witness_dir else None
    if witness_dir:
        witness_dir.mkdir(parents=True, exist_ok=True)
    values, errors, witnesses = {}, {}, {}
    sn = None

    def save(name, text):
        if witness_dir:
            path = witness_dir / name
            path.write_text(text)
            witnesses[name.split(".")[0]] = str(path)

    for key in wanted:
        try:
            if key == "tw":
                values["tw"] = treewidth_exact(G, budget=caps.budget("treewidth"))
            elif key == "dsn":
                d, S = dsn_exact(G, budget=caps.budget("dsn"))
                values["dsn"] = d
                save("dsn.scramble", fileio.format_scramble(S))
            elif key == "sn":
                sn = sn_interval(G, caps)
                values["sn"] = [sn.lower, sn.upper]
                if sn.lower_witness and hasattr(sn.lower_witness[1], "masks"):
                    save("sn_lower.scramble", fileio.format_scramble(sn.lower_witness[1]))
            elif key == "cart":
                cart = carton_value(G, sn=sn, caps=caps)
                values["cart"] = int(cart.lower) if cart.exact else [cart.lower, cart.upper]
                if cart.upper_witness and hasattr(cart.upper_witness[1], "masks"):
                    save("cart.scramble", fileio.format_scramble(cart.upper_witness[1]))
            elif key == "scw":
                w, T = screewidth_exact(G, budget=caps.budget("screewidth"))
                values["scw"] = w
                save("scw.tcd.json", fileio.dumps(T.to_json()) + "\n")
            elif key == "gon":
                g, D = gonality_exact(G, cap=G.n, budget=caps.budget("gonality"))
                values["gon"] = g
                save("gon.divisor.json", fileio.dumps(D.to_json()) + "\n")
        except FeasibilityCapExceeded as exc:
            errors[key] = f"{type(exc).__name__}: {exc}"
    _emit({"graph": str(args.graph), "values": values, "errors": errors, "witnesses": witnesses}, args.out)


def cmd_check_scramble(args) -> None:
    G = fileio.load_graph(args.graph)
    S = fileio.parse_scramble(fileio.read_text(args.scramble), G)
    rep = order(S)
    _emit(rep.to_json())
    if args.min_order is not None and rep.order < args.min_order:
        raise CheckFailed(f"order {rep.order} below required {args.min_order}")


def cmd_check_tcd(args) -> None:
    G = fileio.load_graph(args.graph)
    T = fileio.parse_tcd(fileio.read_text(args.tcd))
    lw, bw, width = tcd_width(T, G)
    _emit({"lw": lw, "bw": bw, "width": width})
    if args.max_width is not None and width > args.max_width:
        raise CheckFailed(f"width {width} above allowed {args.max_width}")


def cmd_check_embedding(args) -> None:
    G = fileio.load_graph(args.graph)
    pi = fileio.parse_embedding(fileio.read_text(args.embedding))
    c = congestion(pi, G)
    out = {"congestion": c}
    if G.n >= 3:
        out["tcd_width"] = tcd_width(embedding_to_tcd(pi, G), G)[2]
    _emit(out)
    if args.max_congestion is not None and c > args.max_congestion:
        raise CheckFailed(f"congestion {c} above allowed {args.max_congestion}")


def cmd_gon(args) -> None:
    G = fileio.load_graph(args.graph)
    if args.divisor:
        D = fileio.parse_divisor(fileio.read_text(args.divisor))
        ok = has_positive_rank(G, D)
        _emit({"degree": D.degree, "positive_rank": ok, "chips": list(D.chips)})
        if not ok:
            raise CheckFailed("divisor does not have positive rank")
        return
    g, D = gonality_exact(G, cap=args.cap)
    _emit({"gon": g, "witness": D.to_json()})


def cmd_approx(args) -> None:
    G = fileio.load_graph(args.graph)
    if args.method == "khit":
        res = approx_n_minus_alpha(G, args.k)
    elif args.method == "gavril":
        res = gavril_2approx(G)
    elif args.method == "family":
        res = family_gon_sn_approx(G)
    else:
        res = scaled_kc_approx(G, args.k, Fraction(args.c))
        res.details["c_chain_holds"] = bool(res.details["c_chain_holds"])
    out = res.to_json()
    out["value"] = float(out["value"]) if isinstance(out["value"], Fraction) else out["value"]
    out["factor"] = float(out["factor"]) if isinstance(out["factor"], Fraction) else out["factor"]
    _emit(out)


def _load_corpus(path: str):
    files = sorted(Path(path).glob("*.graph")) if Path(path).is_dir() else []
    return [(f.stem, fileio.load_graph(f)) for f in files]


def cmd_suite(args) -> None:
    kwargs = {}
    if args.corpus is not None:
        kwargs["corpus"] = _load_corpus(args.corpus)
    rep = run_suite(args.name, **kwargs)
    for rec in rep.records:
        mark = {True: "PASS", False: "FAIL", None: "SKIP"}[rec.passed]
        print(f"{mark} {rec.check_id}", file=sys.stderr)
    _emit({k: v for k, v in rep.to_json().items() if k != "schema"}, args.out)
    if not rep.passed:
        raise CheckFailed(f"{len(rep.failures())} check(s) failed")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="scramble-lab", description="Scramble, carton and width invariants of small multigraphs.")
    p.add_argument("--budget-ms", type=float, default=None, help=f"wall-clock cap per search (also via {ENV_BUDGET_MS})")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a family member as a graph file")
    g.add_argument("family", choices=sorted(FAMILIES))
    g.add_argument("params", type=int, nargs="*")
    g.add_argument("-o", "--out")
    g.set_defaults(func=cmd_gen)

    for name in ("compute", "invariants"):
        c = sub.add_parser(name, help="compute invariants (exact values or certified intervals)")
        c.add_argument("graph")
        c.add_argument("--only", help=f"comma-separated subset of {','.join(INVARIANTS)}")
        c.add_argument("--witness-dir", help="write witness files here")
        c.add_argument("-o", "--out", help="also write the JSON report here")
        c.set_defaults(func=cmd_compute)

    s = sub.add_parser("check-scramble", help="order of a scramble, with witnesses")
    s.add_argument("graph")
    s.add_argument("scramble")
    s.add_argument("--min-order", type=int)
    s.set_defaults(func=cmd_check_scramble)

    t = sub.add_parser("check-tcd", help="widths of a tree-cut decomposition")
    t.add_argument("graph")
    t.add_argument("tcd")
    t.add_argument("--max-width", type=int)
    t.set_defaults(func=cmd_check_tcd)

    e = sub.add_parser("check-embedding", help="congestion of a sub-cubic leaf embedding")
    e.add_argument("graph")
    e.add_argument("embedding")
    e.add_argument("--max-congestion", type=int)
    e.set_defaults(func=cmd_check_embedding)

    q = sub.add_parser("gon", help="gonality with a witness divisor, or check a divisor")
    q.add_argument("graph")
    q.add_argument("--cap", type=int, default=6)
    q.add_argument("--divisor", help="divisor JSON to test for positive rank instead")
    q.set_defaults(func=cmd_gon)

    a = sub.add_parser("approx", help="approximation algorithms")
    a.add_argument("graph")
    a.add_argument("--method", choices=["khit", "gavril", "family", "kc"], required=True)
    a.add_argument("--k", type=int, default=2)
    a.add_argument("--c", default="2")
    a.set_defaults(func=cmd_approx)

    r = sub.add_parser("suite", help="run a check suite")
    r.add_argument("name", choices=sorted(SUITES))
    r.add_argument("--corpus", help="directory of *.graph files (default: built-in corpus)")
    r.add_argument("-o", "--out")
    r.set_defaults(func=cmd_suite)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.budget_ms is not None:
        os.environ[ENV_BUDGET_MS] = str(args.budget_ms)
    try:
        args.func(args)
    except (ParseError, BadParams) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    except ScrambleLabError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Text and JSON formats for graphs, scrambles, decompositions, embeddings and divisors.

Graph files::

    n 4
    # comment
    0 1 2      (endpoints, then multiplicity; defaults to 1)

Scramble files::

    scramble 2
    0 1
    2 3
"""
from __future__ import annotations

import json
import math
from pathlib import Path

from .chipfiring import Divisor
from .errors import GraphError, ParseError
from .graph import MultiGraph, build_graph
from .scramble import Scramble, make_scramble
from .width.congestion import SubcubicEmbedding
from .width.treecut import TreeCutDecomposition

SCHEMA_VERSION = 1


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _ints(lineno: int, line: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {line!r}") from None


def parse_graph(text: str) -> MultiGraph:
    body = _lines(text)
    try:
        lineno, header = next(body)
    except StopIteration:
        raise ParseError("empty graph file") from None
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n":
        raise ParseError(f"line {lineno}: expected 'n <count>', got {header!r}")
    n = _ints(lineno, parts[1])[0]
    if n < 1:
        raise ParseError(f"line {lineno}: vertex count must be >= 1")
    edges = []
    for lineno, line in body:
        vals = _ints(lineno, line)
        if len(vals) == 2:
            vals.append(1)
        if len(vals) != 3 or vals[2] < 1:
            raise ParseError(f"line {lineno}: expected 'u v [m]' with m >= 1, got {line!r}")
        edges.append(tuple(vals))
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise ParseError(f"{type(exc).__name__}: {exc}") from exc


def format_graph(G: MultiGraph) -> str:
    out = [f"n {G.n}"]
    out += [f"{u} {v} {m}" for u, v, m in G.edges()]
    return "\n".join(out) + "\n"


def parse_scramble(text: str, G: MultiGraph) -> Scramble:
    body = list(_lines(text))
    if not body:
        raise ParseError("empty scramble file")
    lineno, header = body[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "scramble":
        raise ParseError(f"line {lineno}: expected 'scramble <count>', got {header!r}")
    count = _ints(lineno, parts[1])[0]
    eggs = [_ints(ln, line) for ln, line in body[1:]]
    if len(eggs) != count:
        raise ParseError(f"header promises {count} eggs, file has {len(eggs)}")
    return make_scramble(G, eggs)


def format_scramble(S: Scramble) -> str:
    out = [f"scramble {len(S)}"]
    out += [" ".join(map(str, egg)) for egg in S.eggs]
    return "\n".join(out) + "\n"


def _load_json(text: str, what: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{what}: invalid JSON ({exc})") from None
    if not isinstance(obj, dict):
        raise ParseError(f"{what}: expected a JSON object")
    return obj


def parse_tcd(text: str) -> TreeCutDecomposition:
    return TreeCutDecomposition.from_json(_load_json(text, "decomposition"))


def parse_embedding(text: str) -> SubcubicEmbedding:
    return SubcubicEmbedding.from_json(_load_json(text, "embedding"))


def parse_divisor(text: str) -> Divisor:
    obj = _load_json(text, "divisor")
    try:
        return Divisor.from_json(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"divisor: {exc}") from None


def jsonable(obj):
    """Recursively replace infinities with "inf" so output is strict JSON."""
    if isinstance(obj, float) and math.isinf(obj):
        return "inf"
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True)


def read_text(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(path) -> MultiGraph:
    return parse_graph(read_text(path))


def save_graph(G: MultiGraph, path) -> None:
    Path(path).write_text(format_graph(G))

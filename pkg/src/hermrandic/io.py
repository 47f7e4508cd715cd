"""The ``mgraph`` text format and JSON/text rendering of reports.

Format::

    # comment lines and blank lines are ignored
    mgraph 3
    e 0 2        undirected edge {0, 2}
    a 0 1        arc 0 -> 1

Indices are 0-based.  :func:`serialize` writes edges sorted by
``(min, max)`` and then arcs sorted by ``(tail, head)``.
"""

from __future__ import annotations

import enum
import json
import math
import numbers
import re
from dataclasses import asdict, is_dataclass
from fractions import Fraction
from pathlib import Path

from .graph import (
    DuplicateConnection,
    IndexOutOfRange,
    InvariantViolation,
    LoopEdge,
    MixedGraph,
)

__all__ = [
    "MGraphSyntaxError",
    "parse",
    "serialize",
    "read_graph",
    "to_jsonable",
    "dumps_json",
    "format_rational",
]

_INDEX = re.compile(r"\d+")


class MGraphSyntaxError(ValueError):
    def __init__(self, line: int, token: str, message: str) -> None:
        super().__init__(f"line {line}: {message} (at {token!r})")
        self.line = line
        self.token = token


def parse(text: str) -> MixedGraph:
    """Parse ``mgraph`` text; raises :class:`MGraphSyntaxError` or an
    :class:`~hermrandic.graph.InvariantViolation` naming the line."""
    n = None
    edges: list[tuple[int, int]] = []
    arcs: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if tokens[0] != "mgraph":
                raise MGraphSyntaxError(lineno, tokens[0], "expected header 'mgraph <n>'")
            if len(tokens) != 2 or not _INDEX.fullmatch(tokens[1]):
                raise MGraphSyntaxError(lineno, " ".join(tokens[1:]), "header needs one vertex count")
            n = int(tokens[1])
            if n < 1:
                raise InvariantViolation(f"line {lineno}: vertex count must be at least 1")
            continue
        tag = tokens[0]
        if tag not in ("e", "a"):
            raise MGraphSyntaxError(lineno, tag, "expected 'e' or 'a'")
        if len(tokens) != 3:
            raise MGraphSyntaxError(lineno, line, f"'{tag}' takes exactly two vertex indices")
        for tok in tokens[1:]:
            if not _INDEX.fullmatch(tok):
                raise MGraphSyntaxError(lineno, tok, "vertex index must be a non-negative decimal integer")
        u, v = int(tokens[1]), int(tokens[2])
        if u >= n or v >= n:
            raise IndexOutOfRange(f"line {lineno}: ({u},{v}) has an endpoint outside [0, {n})")
        if u == v:
            raise LoopEdge(f"line {lineno}: ({u},{v}) is a loop")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateConnection(f"line {lineno}: pair {key} already connected on line {seen[key]}")
        seen[key] = lineno
        (edges if tag == "e" else arcs).append((u, v))
    if n is None:
        raise MGraphSyntaxError(0, "", "missing 'mgraph <n>' header")
    return MixedGraph(n, frozenset(edges), frozenset(arcs))


def serialize(g: MixedGraph) -> str:
    lines = [f"mgraph {g.n}"]
    lines += [f"e {u} {v}" for u, v in sorted(g.edges)]
    lines += [f"a {u} {v}" for u, v in sorted(g.arcs)]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> MixedGraph:
    return parse(Path(path).read_text(encoding="utf-8"))


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def to_jsonable(obj):
    """Recursively convert report objects into JSON-ready values.

    Fractions become ``"num/den"`` strings; enums become their values.
    """
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if is_dataclass(obj) and not isinstance(obj, type):
        return {k: to_jsonable(v) for k, v in asdict(obj).items()}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, frozenset, set)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in items]
    return obj


def _float17(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"{x!r} is not representable in JSON")
    text = format(x, ".17g")
    # keep a float marker so readers do not turn 1.0 into an integer
    return text if any(ch in text for ch in ".e") else text + ".0"


def _emit(obj, depth: int) -> str:
    pad = "  " * (depth + 1)
    end = "  " * depth
    if isinstance(obj, (bool, str)) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, numbers.Integral):
        return str(int(obj))
    if isinstance(obj, numbers.Real):
        return _float17(float(obj))
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        body = ",\n".join(f"{pad}{json.dumps(k)}: {_emit(v, depth + 1)}" for k, v in obj.items())
        return "{\n" + body + "\n" + end + "}"
    if not obj:
        return "[]"
    body = ",\n".join(pad + _emit(v, depth + 1) for v in obj)
    return "[\n" + body + "\n" + end + "]"


def dumps_json(obj) -> str:
    """JSON text with floats at 17 significant digits, so every float
    parses back to the identical double."""
    return _emit(to_jsonable(obj), 0)

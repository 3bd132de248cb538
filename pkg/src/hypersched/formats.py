"""Text formats: hypergraph / demand / weight-matrix files and report pieces.

Files use 1-based link labels; `#` starts a comment anywhere on a line.
All rationals are written `p/q` in lowest terms (integers without `/1`),
which is exactly what ``fractions.Fraction`` parses back.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .greedy import WeightMatrix
from .hypergraph import Hypergraph
from .intervals import IntervalSet


def _significant_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_fraction(token, path, lineno):
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(path, lineno, f"bad rational {token!r}") from None


def parse_hypergraph_text(text, path="<input>"):
    """Parse `links N` + `edge a b ...` lines (1-based labels).

    Returns (hypergraph, edge_lines) where edge_lines maps each 0-based edge
    tuple to the line it came from, for later diagnostics.
    """
    num_links = None
    edges = []
    edge_lines = {}
    for lineno, line in _significant_lines(text):
        tokens = line.split()
        if tokens[0] == "links":
            if num_links is not None:
                raise ParseError(path, lineno, "duplicate links line")
            if len(tokens) != 2 or not tokens[1].isdigit() or int(tokens[1]) < 1:
                raise ParseError(path, lineno, "expected `links N` with N >= 1")
            num_links = int(tokens[1])
        elif tokens[0] == "edge":
            if num_links is None:
                raise ParseError(path, lineno, "edge before links line")
            labels = []
            for tok in tokens[1:]:
                if not tok.isdigit():
                    raise ParseError(path, lineno, f"bad link label {tok!r}")
                lab = int(tok)
                if not 1 <= lab <= num_links:
                    raise ParseError(path, lineno, f"label {lab} outside 1..{num_links}")
                labels.append(lab - 1)
            if not labels:
                raise ParseError(path, lineno, "edge line with no links")
            edge = tuple(sorted(set(labels)))
            edges.append(edge)
            edge_lines.setdefault(edge, lineno)
        else:
            raise ParseError(path, lineno, f"unknown directive {tokens[0]!r}")
    if num_links is None:
        raise ParseError(path, 1, "missing links line")
    return Hypergraph(num_links, tuple(edges)), edge_lines


def parse_demand_text(text, path="<input>"):
    """Parse the single `demand v1 ... vN` line; returns (values, lineno)."""
    found = None
    for lineno, line in _significant_lines(text):
        tokens = line.split()
        if tokens[0] != "demand":
            raise ParseError(path, lineno, f"unknown directive {tokens[0]!r}")
        if found is not None:
            raise ParseError(path, lineno, "duplicate demand line")
        values = tuple(_parse_fraction(t, path, lineno) for t in tokens[1:])
        for v in values:
            if not 0 <= v <= 1:
                raise ParseError(path, lineno, f"demand {v} outside [0, 1]")
        found = (values, lineno)
    if found is None:
        raise ParseError(path, 1, "missing demand line")
    return found


def parse_weight_text(text, path="<input>", n=None):
    """Parse a weight matrix: one row of rationals per line."""
    rows = []
    for lineno, line in _significant_lines(text):
        rows.append(tuple(_parse_fraction(t, path, lineno) for t in line.split()))
    if not rows:
        raise ParseError(path, 1, "empty weight matrix")
    width = len(rows[0])
    if any(len(r) != width for r in rows) or len(rows) != width:
        raise ParseError(path, 1, f"weight matrix must be square, got {len(rows)} rows")
    if n is not None and width != n:
        raise ParseError(path, 1, f"weight matrix is {width}x{width}, hypergraph has {n} links")
    return WeightMatrix(tuple(rows))


def format_set(links) -> str:
    """Space-separated 1-based labels; `-` for the empty set."""
    if not links:
        return "-"
    return " ".join(str(v + 1) for v in sorted(links))


def format_demand_line(values) -> str:
    return "demand " + " ".join(str(Fraction(v)) for v in values)


def format_interval_set(js: IntervalSet) -> str:
    if not js.intervals:
        return "∅"
    return " ∪ ".join(f"[{a},{b})" for a, b in js.intervals)


def parse_interval_set(text) -> IntervalSet:
    """Inverse of format_interval_set (used for round-trip checks)."""
    text = text.strip()
    if text == "∅":
        return IntervalSet(())
    pieces = []
    for part in text.split("∪"):
        part = part.strip()
        if not (part.startswith("[") and part.endswith(")")):
            raise ValueError(f"bad interval {part!r}")
        a, b = part[1:-1].split(",")
        pieces.append((Fraction(a), Fraction(b)))
    return IntervalSet(tuple(pieces))

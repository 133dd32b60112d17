"""Plain-text readers and writers.

Edge lists: one edge per line as two whitespace-separated nonnegative
integer labels; blank lines and ``#`` comments are ignored. A line with a
single label declares an isolated vertex, which is how the one-vertex tree
is written.

Sequences and instances: integers separated by whitespace and/or commas.
Partitions: one part per line, whitespace-separated labels.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

from .graph import Graph, Tree


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int, source: str = "<input>") -> None:
        self.line = line
        self.column = column
        self.source = source
        super().__init__(f"{source}:{line}:{column}: {message}")


_TOKEN = re.compile(r"[^\s,]+")


def _tokens(text: str) -> Iterable[tuple[str, int, int]]:
    """Yield ``(token, line, column)`` with comments stripped; 1-based positions."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        for m in _TOKEN.finditer(line):
            yield m.group(), lineno, m.start() + 1


def _as_int(tok: str, line: int, col: int, source: str, nonnegative: bool = False) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", line, col, source) from None
    if nonnegative and value < 0:
        raise ParseError(f"expected a nonnegative integer, got {value}", line, col, source)
    return value


def parse_sequence(text: str, source: str = "<input>") -> list[int]:
    values = [_as_int(tok, ln, col, source) for tok, ln, col in _tokens(text)]
    if not values:
        raise ParseError("empty sequence", 1, 1, source)
    return values


def parse_instance(text: str, source: str = "<input>") -> list[int]:
    values = parse_sequence(text, source)
    for tok, ln, col in _tokens(text):
        if int(tok) <= 0:
            raise ParseError(f"instance elements must be positive, got {tok}", ln, col, source)
    return values


def parse_edge_list(text: str, source: str = "<input>") -> tuple[list[tuple[int, int]], list[int]]:
    """Return ``(edges, isolated_labels)``."""
    edges: list[tuple[int, int]] = []
    isolated: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if not toks:
            continue
        if len(toks) > 2:
            raise ParseError("expected two labels per edge line", lineno, toks[2][1], source)
        labels = [_as_int(t, lineno, c, source, nonnegative=True) for t, c in toks]
        if len(labels) == 1:
            isolated.append(labels[0])
        else:
            edges.append((labels[0], labels[1]))
    if not edges and not isolated:
        raise ParseError("no vertices", 1, 1, source)
    return edges, isolated


def read_graph(text: str, source: str = "<input>", tree: bool = False) -> Graph:
    edges, isolated = parse_edge_list(text, source)
    cls = Tree if tree else Graph
    return cls.from_edges(edges, isolated)


def parse_partition(text: str, source: str = "<input>") -> list[list[int]]:
    parts = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        part = [
            _as_int(m.group(), lineno, m.start() + 1, source, nonnegative=True)
            for m in re.finditer(r"\S+", line)
        ]
        if part:
            parts.append(part)
    if not parts:
        raise ParseError("empty partition", 1, 1, source)
    return parts


def format_sequence(values: Iterable[int]) -> str:
    return " ".join(str(v) for v in values)


def format_edge_list(g: Graph) -> str:
    if g.n == 1:
        return f"{g.labels[0]}\n"
    return "".join(f"{u} {v}\n" for u, v in g.labelled_edges())


def format_partition(parts: Iterable[Sequence[Hashable]]) -> str:
    return "".join(" ".join(str(x) for x in part) + "\n" for part in parts)


def format_matrix(rows: Iterable[Sequence[Fraction]]) -> str:
    return "".join(" ".join(str(x) for x in row) + "\n" for row in rows)

"""Plain-text edge-list format shared by the CLI and the generators.

The first non-comment line is the vertex count n; every following
non-empty line is "u v" with 0-based indices, whitespace-delimited.
Lines starting with '#' are comments.  Duplicate pairs and both
orientations collapse to a single edge.
"""

from __future__ import annotations

import os

from .errors import EdgeListFormatError
from .graph import Graph, from_edge_list


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise EdgeListFormatError(f"line {lineno}: {token!r} is not an integer") from None


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise EdgeListFormatError(
                    f"line {lineno}: expected a single vertex count, got {raw!r}")
            n = _parse_int(tokens[0], lineno)
            if n < 1:
                raise EdgeListFormatError(f"line {lineno}: vertex count must be positive")
            continue
        if len(tokens) != 2:
            raise EdgeListFormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        edges.append((_parse_int(tokens[0], lineno), _parse_int(tokens[1], lineno)))
    if n is None:
        raise EdgeListFormatError("missing vertex count line")
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | os.PathLike) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))

"""Distance-balance diagnostics and the Szeged index.

A connected graph is distance-balanced when for every edge xy the number
of vertices strictly closer to x equals the number strictly closer to y.
The Szeged index sums, over all edges, the product of those two counts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, all_pairs_distances


@dataclass(frozen=True)
class EdgeBalance:
    """Closer-set sizes for one edge (x, y) with x < y."""

    x: int
    y: int
    closer_to_x: int
    closer_to_y: int

    @property
    def gap(self) -> int:
        return abs(self.closer_to_x - self.closer_to_y)


@dataclass(frozen=True)
class ImbalanceReport:
    """Per-edge balance records in lexicographic edge order.

    ``worst_edge`` is the edge with the largest size gap, ties broken by
    lexicographically smallest (x, y); it is None when balanced.
    """

    records: tuple[EdgeBalance, ...]
    balanced: bool
    worst_edge: tuple[int, int] | None


def _edge_balances(g: Graph) -> list[EdgeBalance]:
    rows = all_pairs_distances(g).rows
    out = []
    for x, y in g.edges():
        rx, ry = rows[x], rows[y]
        cx = cy = 0
        for dx, dy in zip(rx, ry):
            if dx < dy:
                cx += 1
            elif dy < dx:
                cy += 1
        out.append(EdgeBalance(x, y, cx, cy))
    return out


def is_distance_balanced(g: Graph) -> bool:
    """True when every edge has equal closer-set sizes; requires connectivity."""
    return all(r.closer_to_x == r.closer_to_y for r in _edge_balances(g))


def imbalance_report(g: Graph) -> ImbalanceReport:
    records = _edge_balances(g)
    balanced = all(r.closer_to_x == r.closer_to_y for r in records)
    worst = None
    if not balanced:
        best_gap = -1
        for r in records:
            if r.gap > best_gap:
                best_gap = r.gap
                worst = (r.x, r.y)
    return ImbalanceReport(tuple(records), balanced, worst)


def szeged_index(g: Graph) -> int:
    """Sum over edges of |closer to x| * |closer to y|.

    Exact for any size (Python integers do not overflow).
    """
    return sum(r.closer_to_x * r.closer_to_y for r in _edge_balances(g))

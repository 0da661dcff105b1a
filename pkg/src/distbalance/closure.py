"""Minimal distance-balanced closures for the recognized tree families.

A distance-balanced closure of G is a distance-balanced supergraph on the
same vertices with the minimum possible number of extra edges.  For trees
whose maximum degree m is at least n-3, that minimum has a closed form and
the closure itself can be written down:

  star          complete graph K_{m+1}; adds C(m+1,2) - m edges
  s2, m odd     K_{m+2}; adds C(m+1,2)
  s2, m even    K_{m+2} minus a perfect matching through the hub/tail
                pair; adds m^2/2 - 1
  s22, broom    K_{m+3} minus the spoke cycle 1..m and the triangle on
                {hub, m+1, m+2}; adds (m^2+m-4)/2       (m >= 3)
  s3            K_{m+3} minus the cycle on spokes 3..m and the 5-cycle
                hub,(m+1),2,1,(m+2); adds (m^2+m-4)/2   (m >= 5)

Every removed edge avoids the tree, each removed cycle lowers the degree
of its vertices from m+2 by exactly 2, and the results are regular with
diameter at most 2, which makes them distance-balanced.  Where the cycles
degenerate (s22 with m=2, s3 with m in {3,4}) the construction falls back
to the exhaustive search and checks the closed form against it.

A connected non-tree with a dominant (degree n-1) vertex is the one
non-tree input handled here: its unique closure is K_n.

Every result carries a computational certificate; minimality beyond the
certified edge count is the search module's job.
"""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import is_distance_balanced
from .errors import (
    DisconnectedGraphError,
    SizeMismatchError,
    UnsupportedFamilyError,
)
from .graph import (
    Graph,
    add_edges,
    all_pairs_distances,
    complete_graph,
    is_connected,
    is_spanning_subgraph,
    regular_degree,
    relabel,
    remove_edges,
)
from .trees import FamilyTag, TreeFamily, classify_tree, is_tree


@dataclass(frozen=True)
class Certificate:
    """Computed facts about a candidate closure of an input graph."""

    contains_input: bool
    distance_balanced: bool
    diameter: int
    regular_degree: int | None
    matches_formula: bool | None

    @property
    def ok(self) -> bool:
        """Containment, balance, regularity, diameter <= 2, and the edge count."""
        return (self.contains_input and self.distance_balanced
                and self.regular_degree is not None and self.diameter <= 2
                and self.matches_formula is not False)


@dataclass(frozen=True)
class ClosureResult:
    closure: Graph
    added_edges: tuple[tuple[int, int], ...]
    min_additions: int
    certificate: Certificate
    family: TreeFamily
    via_search: bool


def minimum_additions_formula(family: TreeFamily) -> int:
    """Closed-form minimum number of added edges for a recognized tree family."""
    m = family.m
    if family.tag is FamilyTag.STAR:
        return m * (m + 1) // 2 - m
    if family.tag is FamilyTag.S2:
        if m % 2 == 0:
            return m * m // 2 - 1
        return m * (m + 1) // 2
    if family.tag in (FamilyTag.S22, FamilyTag.S3, FamilyTag.BROOM):
        return (m * m + m - 4) // 2
    raise UnsupportedFamilyError(f"no closed form for family {family.tag.value!r}")


def _ring(vertices: list[int]) -> list[tuple[int, int]]:
    k = len(vertices)
    return [tuple(sorted((vertices[i], vertices[(i + 1) % k]))) for i in range(k)]


def _canonical_closure(tag: FamilyTag, m: int) -> Graph | None:
    """Closed-form closure on canonical labels; None when it degenerates."""
    if tag is FamilyTag.STAR:
        return complete_graph(m + 1)
    if tag is FamilyTag.S2:
        if m % 2 == 1:
            return complete_graph(m + 2)
        matching = [(0, m + 1)] + [(2 * i - 1, 2 * i) for i in range(1, m // 2 + 1)]
        return remove_edges(complete_graph(m + 2), matching)
    if tag in (FamilyTag.S22, FamilyTag.BROOM):
        if m < 3:
            return None
        removed = _ring(list(range(1, m + 1))) + _ring([0, m + 1, m + 2])
        return remove_edges(complete_graph(m + 3), removed)
    if tag is FamilyTag.S3:
        if m < 5:
            return None
        removed = _ring(list(range(3, m + 1))) + _ring([0, m + 1, 2, 1, m + 2])
        return remove_edges(complete_graph(m + 3), removed)
    raise UnsupportedFamilyError(f"no construction for family {tag.value!r}")


def verify_closure(t: Graph, candidate: Graph,
                   expected_additions: int | None = None) -> Certificate:
    """Certificate for an arbitrary candidate closure of ``t``.

    ``matches_formula`` compares the candidate's extra edge count against
    ``expected_additions`` when given, else stays None.
    """
    if t.n != candidate.n:
        raise SizeMismatchError(f"vertex counts differ: {t.n} vs {candidate.n}")
    contains = is_spanning_subgraph(t, candidate)
    dm = all_pairs_distances(candidate)
    diam = max(max(row) for row in dm.rows)
    matches = None
    if expected_additions is not None:
        matches = candidate.edge_count - t.edge_count == expected_additions
    return Certificate(
        contains_input=contains,
        distance_balanced=is_distance_balanced(candidate),
        diameter=diam,
        regular_degree=regular_degree(candidate),
        matches_formula=matches,
    )


def _inverse(perm: tuple[int, ...]) -> list[int]:
    inv = [0] * len(perm)
    for src, dst in enumerate(perm):
        inv[dst] = src
    return inv


def construct_closure(t: Graph) -> ClosureResult:
    """Minimal distance-balanced closure of a recognized tree (or of a
    connected graph with a dominant vertex, which closes to K_n).

    Raises UnsupportedFamilyError for anything else.  The certificate is
    always computed on the way out.
    """
    if not is_connected(t):
        raise DisconnectedGraphError("closure construction requires a connected graph")
    via_search = False
    if is_tree(t):
        family = classify_tree(t)
        if family.tag is FamilyTag.OTHER:
            raise UnsupportedFamilyError(
                f"classification is {FamilyTag.OTHER.value!r}: max degree "
                f"{family.m} is below n-3 = {t.n - 3}")
        expected = minimum_additions_formula(family)
        canonical = _canonical_closure(family.tag, family.m)
        if canonical is None:
            # degenerate cycle sizes: certify the formula with the exact search
            from .search import SearchConfig, search_minimum_additions

            canonical_tree = relabel(t, family.relabeling)
            found = search_minimum_additions(
                canonical_tree, SearchConfig(prune_mode="regular"))
            assert found.min_additions == expected, (
                f"search found {found.min_additions}, formula says {expected}")
            canonical = add_edges(canonical_tree, found.witnesses[0])
            via_search = True
        closure = relabel(canonical, _inverse(family.relabeling))
    else:
        if t.max_degree() != t.n - 1:
            raise UnsupportedFamilyError(
                "only trees with max degree >= n-3 and graphs with a "
                "dominant vertex are supported")
        family = TreeFamily(FamilyTag.DOMINANT, t.n - 1, tuple(range(t.n)))
        expected = t.n * (t.n - 1) // 2 - t.edge_count
        closure = complete_graph(t.n)
    added = sorted(set(closure.edges()) - set(t.edges()))
    certificate = verify_closure(t, closure, expected)
    return ClosureResult(
        closure=closure,
        added_edges=tuple(added),
        min_additions=len(added),
        certificate=certificate,
        family=family,
        via_search=via_search,
    )

import pytest
from hypothesis import HealthCheck, settings

import helpers

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("suite")


@pytest.fixture(scope="session")
def small_connected_graphs():
    """All labeled connected graphs keyed by vertex count, n <= 6."""
    return {n: helpers.all_connected_graphs(n) for n in range(1, 7)}


@pytest.fixture(scope="session")
def random_corpus():
    """1000 seeded random connected graphs, n <= 12, edge-probability sweep."""
    return helpers.connected_graph_corpus(count=1000, max_n=12, seed=20260810)


@pytest.fixture(scope="session")
def high_degree_trees():
    """Every tree on at most 7 vertices (up to isomorphism) whose maximum
    degree is at least n - 3."""
    out = []
    for n in range(1, 8):
        for t in helpers.all_trees(n):
            if t.max_degree() >= t.n - 3:
                out.append(t)
    return out

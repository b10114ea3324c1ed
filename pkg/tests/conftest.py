"""
tests.conftest.py

Global conftest file for shared pytest fixtures
"""
import itertools

import pytest
from click.testing import CliRunner

from totgraph.main import cli
from totgraph.ring import build_ring
from totgraph.solvers import Budget


@pytest.fixture
def ring_factory():
    """
    Returns a function building (cached) rings from spec text.
    """
    return build_ring


@pytest.fixture
def cli_runner():
    """
    Returns a click.testing.CliRunner bound to the `totgraph` command group.
    """
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(cli, list(args), catch_exceptions=False)

    return invoke


@pytest.fixture
def small_budget():
    """A solver budget small enough to exhaust on purpose."""
    return Budget(max_nodes=3, time_limit=5.0)


def brute_force_chromatic(graph) -> int:
    """
    Smallest k admitting a proper k-coloring, by plain backtracking in vertex order.
    Independent of the solvers; meant for graphs of about 20 vertices or fewer.
    """
    n = graph.vertex_count
    earlier = [[u for u in graph.neighbors(v) if u < v] for v in range(n)]

    def extend(colors, k):
        v = len(colors)
        if v == n:
            return True
        for color in range(min(k, max(colors, default=-1) + 2)):
            if all(colors[u] != color for u in earlier[v]):
                if extend(colors + [color], k):
                    return True
        return False

    return next(k for k in range(n + 1) if extend([], k))


def brute_force_clique(graph) -> int:
    """Largest pairwise-adjacent subset, by exhaustive search."""
    n = graph.vertex_count
    for size in range(n, 0, -1):
        for subset in itertools.combinations(range(n), size):
            if graph.is_clique(subset):
                return size
    return 0

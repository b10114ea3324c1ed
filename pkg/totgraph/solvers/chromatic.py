"""
totgraph.solvers.chromatic.py

Exact chromatic number by iterated k-colorability with DSATUR backtracking.
"""
import logging
import sys
from typing import List, Optional

import networkx as nx

from ..coloring import Coloring, Provenance
from ..graph import Graph
from . import Budget, BudgetExhausted, ChromaticResult, CliqueWitness, Meter, validate_coloring
from .clique import clique_number

LOGGER = logging.getLogger(__name__)


def greedy_coloring(graph: Graph) -> Coloring:
    """Upper bound from networkx's DSATUR heuristic."""
    colors = nx.greedy_color(graph.to_networkx(), strategy="saturation_largest_first")
    return Coloring.from_keys(
        graph, [colors[v] for v in range(graph.vertex_count)], Provenance.SOLVER
    )


def k_coloring(
    graph: Graph, k: int, precolored: List[int], meter: Meter
) -> Optional[List[int]]:
    """
    A proper coloring with colors 0..k-1, or None when none exists.

    `precolored` positions (a clique) get colors 0, 1, ... in order. The next vertex is the
    one of maximum saturation, ties going to the lowest position; it tries the colors already
    in use in ascending order, then one new color.

    :raises BudgetExhausted: when the meter runs out.
    """
    n = graph.vertex_count
    neighbors = [graph.neighbors(v).tolist() for v in range(n)]
    colors = [-1] * n
    counts = [[0] * k for _ in range(n)]
    saturation = [0] * n

    def paint(v: int, color: int, delta: int):
        for u in neighbors[v]:
            counts[u][color] += delta
            if delta > 0 and counts[u][color] == 1:
                saturation[u] += 1
            elif delta < 0 and counts[u][color] == 0:
                saturation[u] -= 1

    for color, v in enumerate(precolored):
        colors[v] = color
        paint(v, color, 1)
    uncolored = set(range(n)) - set(precolored)

    def search(used: int) -> bool:
        if not uncolored:
            return True
        meter.tick()
        v = max(uncolored, key=lambda u: (saturation[u], -u))
        uncolored.discard(v)
        for color in range(min(used + 1, k)):
            if counts[v][color]:
                continue
            colors[v] = color
            paint(v, color, 1)
            if search(max(used, color + 1)):
                return True
            paint(v, color, -1)
            colors[v] = -1
        uncolored.add(v)
        return False

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 2 * n + 200))
    return colors if search(len(precolored)) else None


def chromatic_number(
    graph: Graph, budget: Budget = None, clique: CliqueWitness = None
) -> ChromaticResult:
    """
    Smallest k admitting a proper k-coloring.

    The lower bound starts at the clique size (`clique`, or `clique_number`), the upper bound
    at the greedy DSATUR coloring, and k is raised from the lower bound until a coloring is
    found. When the budget runs out the result is the open bracket with the best coloring.

    :rtype: ChromaticResult
    """
    budget = budget or Budget.default()
    clique = clique or clique_number(graph, budget)
    meter = budget.start()
    best = greedy_coloring(graph)
    lower, upper = clique.size, best.k
    precolored = graph.positions_of(clique.vertices)
    try:
        while lower < upper:
            colors = k_coloring(graph, lower, precolored, meter)
            if colors is None:
                lower += 1
                continue
            best = Coloring.from_keys(graph, colors, Provenance.SOLVER)
            upper = best.k
    except BudgetExhausted as exc:
        LOGGER.warning(f"chromatic search on {graph!r}: {exc}, bracket [{lower}, {upper}]")

    validate_coloring(graph, best)
    return ChromaticResult(
        lower,
        upper,
        best,
        clique,
        nodes_explored=clique.nodes_explored + meter.nodes,
        elapsed_ms=clique.elapsed_ms + meter.elapsed_ms,
    )

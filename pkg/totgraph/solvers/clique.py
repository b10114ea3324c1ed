"""totgraph.solvers.clique.py"""
import logging
from typing import Iterable, List, Tuple

from ..errors import InvalidWitnessError
from ..graph import Graph
from . import Budget, BudgetExhausted, CliqueWitness, validate_clique

LOGGER = logging.getLogger(__name__)


def _lowest(bits: int) -> int:
    return (bits & -bits).bit_length() - 1


def color_classes(candidates: int, rows: List[int]) -> Tuple[List[int], List[int]]:
    """
    Greedy sequential coloring of a candidate bitset, lowest index first.

    :returns: vertices ordered by color and the color number (1-based) of each.
    """
    order, bounds = [], []
    uncolored, color = candidates, 0
    while uncolored:
        color += 1
        available = uncolored
        while available:
            v = _lowest(available)
            available &= ~rows[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            bounds.append(color)
    return order, bounds


def clique_number(graph: Graph, budget: Budget = None, seed: Iterable[int] = ()) -> CliqueWitness:
    """
    Maximum clique by branch-and-bound with greedy-coloring bounds.

    Vertices are scanned in ascending position order. `seed` (vertex ids) is an initial clique
    the search has to beat. When the budget runs out the best clique found so far is returned
    with `exact=False`.

    :rtype: CliqueWitness
    """
    meter = (budget or Budget.default()).start()
    rows = graph.rows
    seed = list(seed)
    best = graph.positions_of(seed) if seed else ([0] if graph.vertex_count else [])
    if not graph.is_clique(best):
        raise InvalidWitnessError("clique seed is not a clique", tuple(seed))

    def expand(current: List[int], candidates: int):
        order, bounds = color_classes(candidates, rows)
        for v, bound in zip(reversed(order), reversed(bounds)):
            if len(current) + bound <= len(best):
                return
            meter.tick()
            grown = current + [v]
            remaining = candidates & rows[v]
            if remaining:
                expand(grown, remaining)
            elif len(grown) > len(best):
                best[:] = grown
            candidates &= ~(1 << v)

    exact = True
    try:
        expand([], (1 << graph.vertex_count) - 1)
    except BudgetExhausted as exc:
        LOGGER.warning(f"clique search on {graph!r}: {exc}, best size {len(best)}")
        exact = False

    witness = CliqueWitness(
        tuple(sorted(int(graph.vertices[p]) for p in best)),
        exact=exact,
        nodes_explored=meter.nodes,
        elapsed_ms=meter.elapsed_ms,
    )
    validate_clique(graph, witness)
    return witness

"""
totgraph.solvers

Exact clique and chromatic number oracles, and certificates combining a coloring with a clique.
"""
import dataclasses
import logging
import time
from typing import Optional, Tuple

from ..coloring import Coloring, verify_coloring
from ..config import get_settings
from ..errors import InvalidWitnessError, VertexCountMismatchError
from ..graph import Graph
from ..models import SolveResult

LOGGER = logging.getLogger(__name__)

CERTIFIED = "certified"
CHI_ONLY = "chi_only"
OMEGA_ONLY = "omega_only"
OPEN = "open"


class BudgetExhausted(Exception):
    """Raised inside a search when its node or time budget runs out."""


@dataclasses.dataclass(frozen=True)
class Budget:
    """Search limits of one solver call."""

    max_nodes: int
    time_limit: float

    @classmethod
    def default(cls) -> "Budget":
        settings = get_settings()
        return cls(settings.solver_max_nodes, settings.solver_time_limit)

    def start(self) -> "Meter":
        return Meter(self)

    def serialize(self) -> dict:
        return {"max_nodes": float(self.max_nodes), "time_limit": float(self.time_limit)}


class Meter:
    """Running node count and clock of a search."""

    # Clock reads are amortized over this many nodes.
    CLOCK_EVERY = 1024

    def __init__(self, budget: Budget):
        self.budget = budget
        self.nodes = 0
        self.started = time.perf_counter()

    @property
    def elapsed_ms(self) -> int:
        return int((time.perf_counter() - self.started) * 1000)

    def tick(self):
        """Count one search node.

        :raises BudgetExhausted: when a limit is reached.
        """
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExhausted(f"node budget of {self.budget.max_nodes} exhausted")
        if self.nodes % self.CLOCK_EVERY == 0:
            if time.perf_counter() - self.started > self.budget.time_limit:
                raise BudgetExhausted(f"time budget of {self.budget.time_limit}s exhausted")


@dataclasses.dataclass(frozen=True)
class CliqueWitness:
    """
    A clique, as sorted vertex ids of the graph.

    `exact` is true when a search proved no larger clique exists.
    """

    vertices: Tuple[int, ...]
    exact: bool = False
    nodes_explored: int = 0
    elapsed_ms: int = 0

    @property
    def size(self) -> int:
        return len(self.vertices)

    def serialize(self) -> dict:
        return SolveResult(
            value=self.size if self.exact else None,
            bracket=None if self.exact else [self.size, self.size],
            witness=list(self.vertices),
            nodes_explored=self.nodes_explored,
            elapsed_ms=self.elapsed_ms,
            status="exact" if self.exact else OPEN,
        ).dict()


def validate_clique(graph: Graph, clique: CliqueWitness):
    """
    :raises InvalidWitnessError: with the first non-adjacent pair of the clique.
    """
    try:
        positions = graph.positions_of(clique.vertices)
    except KeyError as exc:
        raise InvalidWitnessError(f"clique vertex {exc} is not in the graph") from exc
    for i, u in enumerate(positions):
        for v in positions[i + 1 :]:
            if not graph.has_edge(u, v):
                pair = (int(graph.vertices[u]), int(graph.vertices[v]))
                raise InvalidWitnessError(f"clique vertices {pair} are not adjacent", pair)


def validate_coloring(graph: Graph, coloring: Coloring):
    """
    :raises InvalidWitnessError: with the first monochromatic edge.
    """
    if coloring.colors.shape[0] != graph.vertex_count:
        raise VertexCountMismatchError(
            f"coloring of {coloring.colors.shape[0]} vertices for a graph on {graph.vertex_count}"
        )
    if not (set(int(c) for c in coloring.colors) == set(range(coloring.k))):
        raise InvalidWitnessError(f"color ids are not dense in 0..{coloring.k - 1}")
    verdict = verify_coloring(graph, coloring)
    if not verdict.ok:
        u, v = verdict.witness
        edge = (int(graph.vertices[u]), int(graph.vertices[v]))
        raise InvalidWitnessError(f"edge {edge} is monochromatic", edge)


@dataclasses.dataclass(frozen=True)
class ChromaticCertificate:
    """
    A proper coloring and a clique on the same graph.

    certified means both have k vertices/colors, hence ω = χ = k. Otherwise [lower, upper]
    brackets both numbers; chi_only / omega_only record a side proved exact by a solver.
    """

    k: int
    coloring: Coloring
    clique: CliqueWitness
    status: str
    lower: int
    upper: int

    @property
    def certified(self) -> bool:
        return self.status == CERTIFIED

    @property
    def gap(self) -> int:
        return self.upper - self.lower


def certify(
    graph: Graph,
    coloring: Coloring,
    clique: CliqueWitness,
    chi_exact: bool = False,
    omega_exact: bool = False,
) -> ChromaticCertificate:
    """
    Re-validate both witnesses on `graph` and combine them.

    :raises InvalidWitnessError: if the coloring is improper or the clique is not a clique.
    :rtype: ChromaticCertificate
    """
    validate_coloring(graph, coloring)
    validate_clique(graph, clique)
    lower, upper = clique.size, coloring.k
    if lower == upper:
        status = CERTIFIED
    elif chi_exact:
        status = CHI_ONLY
    elif omega_exact or clique.exact:
        status = OMEGA_ONLY
    else:
        status = OPEN
    if status != CERTIFIED:
        LOGGER.debug(f"certificate on {graph!r} open: bracket [{lower}, {upper}] ({status})")
    return ChromaticCertificate(upper, coloring, clique, status, lower, upper)


@dataclasses.dataclass(frozen=True)
class ChromaticResult:
    """
    Outcome of `chromatic_number`: exact when lower == upper, else an open bracket.
    """

    lower: int
    upper: int
    coloring: Coloring
    clique: CliqueWitness
    nodes_explored: int
    elapsed_ms: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> Optional[int]:
        return self.upper if self.exact else None

    def serialize(self) -> dict:
        return SolveResult(
            value=self.value,
            bracket=None if self.exact else [self.lower, self.upper],
            witness=[int(c) for c in self.coloring.colors],
            nodes_explored=self.nodes_explored,
            elapsed_ms=self.elapsed_ms,
            status="exact" if self.exact else OPEN,
        ).dict()


from .chromatic import chromatic_number  # noqa: E402 pylint: disable=wrong-import-position
from .clique import clique_number  # noqa: E402 pylint: disable=wrong-import-position

__all__ = [
    "Budget",
    "BudgetExhausted",
    "ChromaticCertificate",
    "ChromaticResult",
    "CliqueWitness",
    "certify",
    "chromatic_number",
    "clique_number",
    "validate_clique",
    "validate_coloring",
]

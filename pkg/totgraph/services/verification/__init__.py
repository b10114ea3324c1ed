"""totgraph.services.verification"""
import dataclasses
import logging
from abc import ABC, abstractmethod
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple

from ... import __version__
from ...catalog import RingCatalog
from ...coloring import Coloring, Provenance
from ...config import get_settings
from ...graph import Graph
from ...graph.total import build_graph
from ...models import ReportConfig, VerificationReport, VerificationRow, Witnesses
from ...ring import FiniteRing, build_ring
from ...ring.descriptor import RingDescriptor
from ...solvers import (
    Budget,
    ChromaticCertificate,
    CliqueWitness,
    certify,
    chromatic_number,
    clique_number,
)

LOGGER = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class VerifyOptions:
    """Per-run settings of a verification suite."""

    solver_cap: int
    budget: Budget
    workers: int = 1

    @classmethod
    def from_settings(cls, **overrides) -> "VerifyOptions":
        settings = get_settings()
        values = {
            "solver_cap": settings.solver_cap,
            "budget": Budget(settings.solver_max_nodes, settings.solver_time_limit),
            "workers": settings.workers,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)


@dataclasses.dataclass(frozen=True)
class SolverCheck:
    """Exact solver results on a graph; `chi` and `omega` are None where the budget ran out."""

    clique: CliqueWitness
    chi: Optional[int]
    bracket: Tuple[int, int]

    @property
    def omega(self) -> Optional[int]:
        return self.clique.size if self.clique.exact else None

    def agrees(self, value: int) -> bool:
        """No exact solver value differs from `value`."""
        return all(found in (None, value) for found in (self.chi, self.omega))


def solver_check(graph: Graph, budget: Budget, seed=()) -> SolverCheck:
    """Run both exact solvers on a graph, the clique search seeded with `seed`."""
    clique = clique_number(graph, budget, seed=seed)
    result = chromatic_number(graph, budget, clique=clique)
    return SolverCheck(clique, result.value, (result.lower, result.upper))


def make_row(
    ring: FiniteRing,
    kind: str,
    branch: str,
    predicted: Optional[int],
    certificate: ChromaticCertificate,
    status: str,
    solver: Optional[int] = None,
    note: str = "",
) -> VerificationRow:
    """Report row carrying the certificate's coloring classes and clique."""
    return VerificationRow(
        ring=str(ring),
        order=ring.order,
        kind=kind,
        branch=branch,
        predicted=predicted,
        constructed_k=certificate.coloring.k,
        omega=certificate.clique.size,
        solver=solver,
        status=status,
        provenance=certificate.coloring.provenance.value,
        note=note,
        witnesses=Witnesses(
            coloring_classes=certificate.coloring.classes(),
            clique=list(certificate.clique.vertices),
        ),
    )


class VerificationSuite(ABC):
    """
    A verification pipeline over a ring catalog, one or more rows per ring.
    """

    name = ""

    def __init__(self, options: VerifyOptions = None):
        self.options = options or VerifyOptions.from_settings()

    @abstractmethod
    def verify_ring(self, ring: FiniteRing) -> List[VerificationRow]:
        """
        Verify one ring.

        :returns: The report rows of the ring (none when the suite does not cover it).
        :rtype: List[VerificationRow]
        """
        raise NotImplementedError

    def verify_descriptor(self, descriptor: RingDescriptor) -> List[VerificationRow]:
        ring = build_ring(descriptor)
        rows = self.verify_ring(ring)
        for row in rows:
            if row.status in ("FAIL", "EXCEPTION"):
                LOGGER.warning(f"{self.name}: {row.ring} [{row.kind}] {row.status} {row.note}")
            else:
                LOGGER.debug(f"{self.name}: {row.ring} [{row.kind}] {row.status}")
        return rows

    def run(self, catalog: RingCatalog) -> VerificationReport:
        """
        Verify every catalog ring, in a process pool when `workers` > 1.

        Row order is independent of the worker count.

        :rtype: VerificationReport
        """
        if self.options.workers > 1:
            with ProcessPoolExecutor(max_workers=self.options.workers) as executor:
                batches = list(executor.map(self.verify_descriptor, catalog.rings))
        else:
            batches = [self.verify_descriptor(descriptor) for descriptor in catalog.rings]

        report = VerificationReport(
            version=__version__,
            config=ReportConfig(
                suite=self.name,
                pool=[block.text for block in catalog.pool],
                max_order=catalog.max_order,
                solver_cap=self.options.solver_cap,
                budgets=self.options.budget.serialize(),
            ),
            rows=[row for rows in batches for row in rows],
        ).summarize()
        LOGGER.info(
            f"{self.name}: {len(report.rows)} rows, {report.summary.pass_} pass, "
            f"{report.summary.exception} exception, {report.summary.open} open, "
            f"{report.summary.fail} fail"
        )
        return report


def revalidate_row(row: VerificationRow) -> ChromaticCertificate:
    """
    Rebuild the ring and graph of a serialized row and re-check its witnesses.

    :raises InvalidWitnessError: when the stored coloring or clique does not hold up.
    :rtype: ChromaticCertificate
    """
    if isinstance(row, dict):
        row = VerificationRow.parse_obj(row)
    ring = build_ring(row.ring)
    graph = build_graph(ring, row.kind)
    coloring = Coloring.from_classes(
        graph, row.witnesses.coloring_classes, Provenance(row.provenance or "solver")
    )
    return certify(graph, coloring, CliqueWitness(tuple(row.witnesses.clique)))

"""
totgraph.services.verification.total.py

χ(T(Γ(R))) = ω(T(Γ(R))) = χ(Z(Γ(R))) = ω(Z(Γ(R))) = max |m| over the maximal ideals m,
and 4 for T(Γ(Z3 x Z3)).
"""
import logging
from typing import List

from ...coloring.fields import total_hypothesis
from ...coloring.rings import color_total, is_z3z3, total_clique
from ...graph.total import total_graph, zdiv_subgraph
from ...models import VerificationRow
from ...ring import FiniteRing
from ...solvers import CliqueWitness, certify
from . import VerificationSuite, make_row, solver_check

LOGGER = logging.getLogger(__name__)


def total_prediction(ring: FiniteRing, kind: str = "total") -> int:
    """max |m|, or 4 for T(Γ(Z3 x Z3))."""
    if kind == "total" and is_z3z3(ring) and len(ring.jacobson) == 1:
        return 4
    return len(ring.largest_maximal_ideal)


def is_odd_field(ring: FiniteRing) -> bool:
    return ring.is_field and ring.blocks[0].residue_char != 2


class TotalTheoremSuite(VerificationSuite):
    """
    Certify the total and zero-divisor graphs of every ring under hypothesis (i) or (ii), and
    of the rings over Z3 x Z3.

    The total rows of fields of odd characteristic are reported as EXCEPTION: T(Γ(F)) is a
    perfect matching on the nonzero elements, so χ = 2 while max |m| = 1. Their zero-divisor
    rows are the single vertex 0 and are certified like any other row.
    """

    name = "total"

    def verify_ring(self, ring: FiniteRing) -> List[VerificationRow]:
        branch = total_hypothesis(ring)
        if branch == "excluded" and not is_z3z3(ring):
            LOGGER.debug(f"{ring} is outside both hypotheses, skipped")
            return []
        coloring = color_total(ring, self.options.budget)
        rows = []
        for kind, graph in (("total", total_graph(ring)), ("zdiv", zdiv_subgraph(ring))):
            predicted = total_prediction(ring, kind)
            row_branch = "exception" if kind == "total" and is_odd_field(ring) else branch
            if kind == "total":
                seed = total_clique(ring)
            else:
                seed = ring.largest_maximal_ideal.sorted()
                coloring = coloring.restrict(graph)
            clique = CliqueWitness(tuple(seed))
            check = None
            if ring.order <= self.options.solver_cap or row_branch == "exception":
                check = solver_check(graph, self.options.budget, seed)
                if row_branch == "exception":
                    clique = check.clique
            certificate = certify(graph, coloring, clique)

            solver = check.chi if check else None
            if row_branch == "exception":
                status = "EXCEPTION"
                note = (
                    f"odd-characteristic field: χ = {certificate.upper}, "
                    f"ω = {certificate.lower}, max |m| = {predicted}"
                )
            elif certificate.certified and certificate.k == predicted and (
                check is None or check.agrees(predicted)
            ):
                status, note = "PASS", ""
            else:
                status = "FAIL"
                note = (
                    f"{certificate.status}: bracket [{certificate.lower}, {certificate.upper}]"
                    + (f", solver χ={check.chi} ω={check.omega}" if check else "")
                )
            rows.append(
                make_row(ring, kind, row_branch, predicted, certificate, status, solver, note)
            )
        return rows


def verify_total_theorem(catalog, options=None):
    """Run the total-graph suite over a catalog."""
    return TotalTheoremSuite(options).run(catalog)

"""
totgraph.services.verification.conjecture.py

Evidence for χ(T(Γ(R))) = ω(T(Γ(R))) = max |m| (4 for Z3 x Z3) on the rings no theorem covers.
Rows report what was certified; a row never asserts the statement beyond its own ring.
"""
import logging
from typing import List

from ...coloring import Provenance
from ...coloring.fields import total_hypothesis
from ...coloring.fixtures import fixture_for
from ...coloring.rings import color_total, is_z3z3, total_clique
from ...graph.total import total_graph
from ...models import VerificationRow
from ...ring import FiniteRing
from ...solvers import CliqueWitness, certify, chromatic_number, clique_number
from . import VerificationSuite, make_row
from .total import total_prediction

LOGGER = logging.getLogger(__name__)


class ConjectureExplorer(VerificationSuite):
    """
    Certify the total graph of every excluded ring, by stored or coset colorings where they
    exist and by the exact solvers otherwise.

    PASS: certified at the predicted value. FAIL: certified, or solved exactly, at another
    value. OPEN: the solvers ran out of budget.
    """

    name = "conjecture"

    def verify_ring(self, ring: FiniteRing) -> List[VerificationRow]:
        if total_hypothesis(ring) != "excluded":
            return []
        graph = total_graph(ring)
        predicted = total_prediction(ring)
        seed = total_clique(ring)
        chi = None

        if fixture_for(ring) is not None or is_z3z3(ring):
            coloring = color_total(ring)
            clique = CliqueWitness(tuple(seed))
        else:
            clique = clique_number(graph, self.options.budget, seed=seed)
            result = chromatic_number(graph, self.options.budget, clique=clique)
            coloring, chi = result.coloring, result.value
        certificate = certify(graph, coloring, clique, chi_exact=chi is not None)

        if certificate.certified:
            status = "PASS" if certificate.k == predicted else "FAIL"
        elif chi is not None and chi != predicted:
            status = "FAIL"
        else:
            status = "OPEN"
        note = f"{certificate.status}: bracket [{certificate.lower}, {certificate.upper}]"
        if coloring.provenance is Provenance.STORED_Z3CUBED:
            note += "; stored nine-class coloring verified proper"
        if status == "OPEN":
            LOGGER.warning(f"{ring}: open bracket [{certificate.lower}, {certificate.upper}]")
        return [make_row(ring, "total", "excluded", predicted, certificate, status, chi, note)]


def explore_conjecture(catalog, options=None):
    """Run the explorer over a catalog."""
    return ConjectureExplorer(options).run(catalog)

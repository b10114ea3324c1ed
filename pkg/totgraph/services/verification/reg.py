"""
totgraph.services.verification.reg.py

Reg(Γ(R)): χ = ω = 2^|Max(R)| when every residue field is odd, and χ = ω =
|Reg(R)| / (|R/m| - 1) when a smallest residue field R/m has characteristic 2.
"""
import logging
from typing import List, Optional

from ...coloring.rings import color_reg, color_reg_odd, reg_clique
from ...graph.total import reg_subgraph
from ...models import VerificationRow
from ...ring import FiniteRing
from ...solvers import CliqueWitness, certify
from . import VerificationSuite, make_row, solver_check

LOGGER = logging.getLogger(__name__)

CHAR2_BRANCH = "(i)"
ODD_BRANCH = "(ii)"


def reg_branch(ring: FiniteRing) -> str:
    if ring.blocks[0].residue_char == 2:
        return CHAR2_BRANCH
    if all(block.residue_char != 2 for block in ring.blocks):
        return ODD_BRANCH
    return "excluded"


def reg_prediction(ring: FiniteRing) -> Optional[int]:
    """The predicted χ(Reg(Γ(R))), computed from the ring's structure."""
    branch = reg_branch(ring)
    if branch == CHAR2_BRANCH:
        return len(ring.units) // (ring.blocks[0].residue_size - 1)
    if branch == ODD_BRANCH:
        return 2 ** len(ring.maximal_ideals)
    return None


class RegTheoremSuite(VerificationSuite):
    """
    Certify Reg(Γ(R)) for the rings covered by either regular-graph result.
    """

    name = "reg"

    def verify_ring(self, ring: FiniteRing) -> List[VerificationRow]:
        branch = reg_branch(ring)
        if branch == "excluded":
            LOGGER.debug(f"{ring}: smallest residue field odd with an even one present, skipped")
            return []
        predicted = reg_prediction(ring)
        coloring = color_reg(ring) if branch == CHAR2_BRANCH else color_reg_odd(ring)
        graph = reg_subgraph(ring)
        seed = reg_clique(ring)
        certificate = certify(graph, coloring, CliqueWitness(tuple(seed)))

        check = None
        if ring.order <= self.options.solver_cap:
            check = solver_check(graph, self.options.budget, seed)
        if certificate.certified and certificate.k == predicted and (
            check is None or check.agrees(predicted)
        ):
            status, note = "PASS", ""
        else:
            status = "FAIL"
            note = f"{certificate.status}: bracket [{certificate.lower}, {certificate.upper}]"
        solver = check.chi if check else None
        return [make_row(ring, "reg", branch, predicted, certificate, status, solver, note)]


def verify_reg_theorems(catalog, options=None):
    """Run the regular-graph suite over a catalog."""
    return RegTheoremSuite(options).run(catalog)

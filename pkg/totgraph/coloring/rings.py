"""
totgraph.coloring.rings.py

Colorings of T(Γ(R)), Z(Γ(R)) and Reg(Γ(R)) for arbitrary finite rings, lifted from the
residue fields through R/J(R), and the clique witnesses that match them.
"""
import itertools
import logging
from typing import List

import numpy as np

from ..errors import HypothesisError
from ..graph import Graph
from ..graph.total import reg_subgraph, total_graph, zdiv_subgraph
from ..ring import FiniteRing
from ..ring.structure import Quotient, quotient_by_jacobson
from . import Coloring, Provenance
from .fields import color_reg_char2, color_total_fields, total_hypothesis
from .fixtures import fixture_for

LOGGER = logging.getLogger(__name__)

# Classes of the nine J(R)-cosets over Z3 x Z3: (class, fixed position or None for the
# element's own coset position).
Z3Z3_SCHEME = {
    (0, 0): ("a", None),
    (0, 1): ("a1", None),
    (1, 0): ("a1", None),
    (0, 2): ("a2", None),
    (2, 0): ("a2", None),
    (1, 1): ("a1", 0),
    (2, 2): ("a2", 0),
    (1, 2): ("a", 0),
    (2, 1): ("a", 1),
}


def is_z3z3(ring: FiniteRing) -> bool:
    """True when R/J(R) is Z3 x Z3."""
    return [block.residue_size for block in ring.blocks] == [3, 3]


def negation_half(field) -> np.ndarray:
    """Mask of the lower-index element of every pair {a, -a} of nonzero field elements."""
    mask = np.zeros(field.order, dtype=bool)
    mask[[low for low, _ in field.negation_pairs(range(1, field.order))]] = True
    return mask


def _lift_provenance(quotient: Quotient, direct: Provenance) -> Provenance:
    return direct if quotient.coset_size == 1 else Provenance.LIFT


def _lift(graph: Graph, quotient: Quotient, base: Coloring, provenance: Provenance) -> Coloring:
    """Color x by (color of its image in R/J(R), position of x in its coset)."""
    base_color = np.full(quotient.ring.order, -1, dtype=np.int64)
    base_color[base.graph.vertices] = base.colors
    keys = [
        (int(base_color[quotient.proj[x]]), int(quotient.position[x])) for x in graph.vertices
    ]
    return Coloring.from_keys(graph, keys, provenance)


# ################
# Total graph
# ################


def _color_local(ring: FiniteRing, quotient: Quotient, graph: Graph) -> Coloring:
    """
    R/J(R) a field: the coset J(R) is a clique, and the other cosets are cliques when 2 is a
    zero-divisor and otherwise pair up into complete bipartite graphs (x + J, -x + J).
    """
    if ring.zdiv_mask[ring.two]:
        keys = [int(quotient.position[x]) for x in graph.vertices]
    else:
        half = negation_half(quotient.ring.blocks[0])
        residues = quotient.ring.digits[quotient.proj, 0]
        keys = [
            int(quotient.position[x]) if ring.zdiv_mask[x] else int(not half[residues[x]])
            for x in graph.vertices
        ]
    return Coloring.from_keys(graph, keys, Provenance.LOCAL_COSET)


def _color_z3z3(ring: FiniteRing, quotient: Quotient, graph: Graph) -> Coloring:
    """3|J(R)| colors for R/J(R) = Z3 x Z3 with |J(R)| >= 2."""
    keys = []
    for x in graph.vertices:
        digits = tuple(int(d) for d in quotient.ring.digits[quotient.proj[x]])
        tag, fixed = Z3Z3_SCHEME[digits]
        keys.append((tag, int(quotient.position[x]) if fixed is None else fixed))
    return Coloring.from_keys(graph, keys, Provenance.Z3Z3_COSET)


def _color_by_solver(graph: Graph, seed, budget=None) -> Coloring:
    # pylint: disable=import-outside-toplevel
    from ..solvers import chromatic_number, clique_number

    clique = clique_number(graph, budget, seed=seed)
    result = chromatic_number(graph, budget, clique=clique)
    LOGGER.debug(f"solver coloring of {graph!r}: bracket [{result.lower}, {result.upper}]")
    return result.coloring


def color_total(ring: FiniteRing, budget=None) -> Coloring:
    """
    Proper coloring of T(Γ(R)); provenance records which construction applied.

    Local rings color cosets of J(R); Z3 x Z3 and Z3 x Z3 x Z3 use stored colorings; rings
    over Z3 x Z3 with |J(R)| >= 2 use the nine-coset scheme; rings under either theorem
    hypothesis lift the Latin-sum coloring of R/J(R) as (quotient color, coset position);
    everything else is colored by the exact solver.
    """
    quotient = quotient_by_jacobson(ring)
    graph = total_graph(ring)
    if ring.is_local:
        return _color_local(ring, quotient, graph)
    fixture = fixture_for(ring)
    if fixture is not None:
        return fixture
    if is_z3z3(ring):
        return _color_z3z3(ring, quotient, graph)
    if total_hypothesis(ring) != "excluded":
        base = color_total_fields(quotient.ring)
        return _lift(graph, quotient, base, _lift_provenance(quotient, Provenance.F_MAP))
    LOGGER.info(f"{ring} is outside the total-graph theorem, coloring by solver")
    return _color_by_solver(graph, total_clique(ring), budget)


def total_clique(ring: FiniteRing) -> List[int]:
    """
    A clique of T(Γ(R)) of the predicted size: the units of Z3 x Z3, otherwise a largest
    maximal ideal.
    """
    if is_z3z3(ring) and len(ring.jacobson) == 1:
        return [int(u) for u in ring.units]
    return ring.largest_maximal_ideal.sorted()


# ################
# Regular elements
# ################


def color_reg(ring: FiniteRing) -> Coloring:
    """
    Proper coloring of Reg(Γ(R)) with |Reg(R)| / (|R/m| - 1) colors, m a maximal ideal of
    maximum size.

    :raises HypothesisError: when a smallest residue field has odd characteristic.
    """
    if ring.blocks[0].residue_char != 2:
        raise HypothesisError(f"smallest residue field of {ring} is not of characteristic 2")
    quotient = quotient_by_jacobson(ring)
    graph = reg_subgraph(ring)
    if ring.is_local:
        keys = [int(quotient.position[x]) for x in graph.vertices]
        return Coloring.from_keys(graph, keys, Provenance.REG_LOCAL_COSET)
    base = color_reg_char2(quotient.ring)
    return _lift(graph, quotient, base, _lift_provenance(quotient, Provenance.G_MAP))


def color_reg_odd(ring: FiniteRing) -> Coloring:
    """
    Proper coloring of Reg(Γ(R)) with 2^|Max(R)| colors when every residue field is odd.

    The color of a unit is its vector of negation-half memberships; cosets of J(R) are
    independent here, so no coset position is needed.

    :raises HypothesisError: when a residue field has characteristic 2.
    """
    if any(block.residue_char == 2 for block in ring.blocks):
        raise HypothesisError(f"{ring} has a residue field of characteristic 2")
    quotient = quotient_by_jacobson(ring)
    field_ring = quotient.ring
    halves = [negation_half(field) for field in field_ring.blocks]
    graph = reg_subgraph(ring)
    images = field_ring.digits[quotient.proj[graph.vertices]]
    keys = [
        tuple(bool(halves[b][digit]) for b, digit in enumerate(row)) for row in images.tolist()
    ]
    return Coloring.from_keys(graph, keys, Provenance.REG_ODD_SIGN)


def reg_clique(ring: FiniteRing) -> List[int]:
    """
    A clique of Reg(Γ(R)) of the predicted size.

    Smallest residue field of characteristic 2: the units over {1} x F2* x ... x Fn*.
    All residue fields odd: one lift of every element of {h1, -h1} x ... x {hn, -hn}.
    """
    quotient = quotient_by_jacobson(ring)
    field_ring = quotient.ring
    units = ring.units
    if ring.blocks[0].residue_char == 2:
        first = field_ring.digits[quotient.proj[units], 0]
        return [int(u) for u in units[first == field_ring.blocks[0].one]]
    choices = []
    for field in field_ring.blocks:
        low, high = field.negation_pairs(range(1, field.order))[0]
        choices.append((low, high))
    images = field_ring.encode(np.array(list(itertools.product(*choices))))
    return sorted(quotient.lift(int(s), 0) for s in images)


def color_graph(ring: FiniteRing, kind: str = "total", budget=None) -> Coloring:
    """
    The construction matching a graph kind; Reg graphs outside both hypotheses fall back to
    the solver.
    """
    kind = kind.lower()
    if kind == "total":
        return color_total(ring, budget)
    if kind == "zdiv":
        return color_total(ring, budget).restrict(zdiv_subgraph(ring))
    if ring.blocks[0].residue_char == 2:
        return color_reg(ring)
    if all(block.residue_char != 2 for block in ring.blocks):
        return color_reg_odd(ring)
    return _color_by_solver(reg_subgraph(ring), (), budget)

"""
totgraph.coloring.fields.py

Colorings of products of fields F1 x ... x Fn (blocks in canonical order, so F1 is a field of
minimum size) read off Latin-sum arrays with F1 on the rows.
"""
import logging
from typing import List

import numpy as np

from ..errors import HypothesisError
from ..graph.total import reg_subgraph, total_graph
from ..latin import LatinSumArray, build_latin_sum, build_latin_sum_reg
from ..ring import FiniteRing
from . import Coloring, Provenance

LOGGER = logging.getLogger(__name__)


def _check_fields(ring: FiniteRing):
    if len(ring.blocks) < 2 or not all(block.is_field for block in ring.blocks):
        raise HypothesisError(f"{ring} is not a product of at least two fields")


def total_hypothesis(ring: FiniteRing) -> str:
    """
    Branch of the total-graph theorem by residue fields: "(i)" when a smallest residue field
    has characteristic 2, "(ii)" when every residue field is odd and the two smallest are not
    both of order 3, else "excluded".
    """
    first = ring.blocks[0]
    if first.residue_char == 2:
        return "(i)"
    if all(block.residue_char != 2 for block in ring.blocks):
        if len(ring.blocks) < 2 or not first.residue_size == ring.blocks[1].residue_size == 3:
            return "(ii)"
    return "excluded"


def _latin_keys(ring: FiniteRing, vertices: np.ndarray, arrays: List[LatinSumArray]) -> list:
    rows = arrays[0].row_labels.positions()
    first = rows[ring.digits[vertices, 0]]
    columns = []
    for b, array in enumerate(arrays, start=1):
        column = array.col_labels.positions()[ring.digits[vertices, b]]
        columns.append(array.entries[first, column])
    return [tuple(int(c[i]) for c in columns) for i in range(len(vertices))]


def color_total_fields(ring: FiniteRing) -> Coloring:
    """
    Proper coloring of T(Γ(F1 x ... x Fn)) with exactly |F2|...|Fn| colors.

    The color of (x1, ..., xn) is the tuple of entries L(F1, Fi)[x1, xi], i >= 2.

    :raises HypothesisError: outside hypotheses (i) and (ii).
    """
    _check_fields(ring)
    branch = total_hypothesis(ring)
    if branch == "excluded":
        raise HypothesisError(f"no Latin-sum coloring of T(Γ({ring})): Z3 x Z3 summand")
    arrays = [build_latin_sum(ring.blocks[0], block) for block in ring.blocks[1:]]
    graph = total_graph(ring)
    coloring = Coloring.from_keys(
        graph, _latin_keys(ring, graph.vertices, arrays), Provenance.F_MAP
    )
    LOGGER.debug(f"f-map coloring of T(Γ({ring})) under {branch}: {coloring.k} colors")
    return coloring


def color_reg_char2(ring: FiniteRing) -> Coloring:
    """
    Proper coloring of Reg(Γ(F1 x ... x Fn)) with exactly (|F2|-1)...(|Fn|-1) colors, for
    char(F1) = 2.

    :raises HypothesisError: when char(F1) != 2.
    """
    _check_fields(ring)
    if ring.blocks[0].residue_char != 2:
        raise HypothesisError(f"smallest field of {ring} does not have characteristic 2")
    arrays = [build_latin_sum_reg(ring.blocks[0], block) for block in ring.blocks[1:]]
    graph = reg_subgraph(ring)
    return Coloring.from_keys(graph, _latin_keys(ring, graph.vertices, arrays), Provenance.G_MAP)

"""totgraph.graph.blowup.py"""
import dataclasses
from typing import Tuple

import numpy as np

from ..errors import TotgraphError
from ..ring import FiniteRing
from ..ring.structure import quotient_by_jacobson
from . import Graph
from .total import reg_subgraph, total_graph


@dataclasses.dataclass(frozen=True, eq=False)
class BlowUpSpec:
    """
    Base graph whose vertices are each replaced by a part of `size` vertices.

    complete[i] says whether the part of base vertex i is a clique (else independent).
    """

    base: Graph
    size: int
    complete: Tuple[bool, ...]

    def __post_init__(self):
        if self.size < 1:
            raise TotgraphError(f"blow-up parts must have size >= 1, got {self.size}")
        if len(self.complete) != self.base.vertex_count:
            raise TotgraphError(
                f"{len(self.complete)} part tags for {self.base.vertex_count} base vertices"
            )

    @classmethod
    def uniform(cls, base: Graph, size: int, complete: bool) -> "BlowUpSpec":
        return cls(base, size, (complete,) * base.vertex_count)


def blow_up(spec: BlowUpSpec) -> Graph:
    """
    G(H_1, ..., H_n): parts joined completely along base edges.

    Vertex b * size + t is member t of the part of base vertex b.
    """
    m = spec.size
    inner = np.kron(np.diag(np.asarray(spec.complete, dtype=bool)), ~np.eye(m, dtype=bool))
    cross = np.kron(spec.base.adjacency, np.ones((m, m), dtype=bool))
    return Graph(cross | inner, kind="blow-up")


def quotient_blow_up_spec(ring: FiniteRing, kind: str = "total") -> BlowUpSpec:
    """
    T(Γ(R)) (or Reg(Γ(R))) as a balanced blow-up of the graph of R/J(R).

    The part over f is complete iff 2f is a zero-divisor; parts have |J(R)| vertices.
    """
    quotient = quotient_by_jacobson(ring)
    field_ring = quotient.ring
    base = total_graph(field_ring) if kind == "total" else reg_subgraph(field_ring)
    two_f = field_ring.mul(field_ring.two, base.vertices)
    complete = tuple(bool(flag) for flag in field_ring.zdiv_mask[two_f])
    return BlowUpSpec(base, quotient.coset_size, complete)


def lifted_graph(ring: FiniteRing, kind: str = "total") -> Graph:
    """
    The graph of R with vertices listed in coset order, so that its adjacency matrix equals
    that of `blow_up(quotient_blow_up_spec(ring, kind))`.
    """
    quotient = quotient_by_jacobson(ring)
    graph = total_graph(ring) if kind == "total" else reg_subgraph(ring)
    order = quotient.coset_order(graph.vertices)
    return graph.permuted(graph.positions_of(order))

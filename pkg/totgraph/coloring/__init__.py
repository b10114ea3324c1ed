"""
totgraph.coloring

Vertex colorings and the universal properness check.
"""
import collections
import dataclasses
import enum
from typing import Hashable, List, Sequence

import numpy as np

from ..errors import VertexCountMismatchError
from ..graph import Graph
from ..graph.blowup import BlowUpSpec, blow_up
from ..models import ColoringExport

Verdict = collections.namedtuple("Verdict", ["ok", "witness"])


class Provenance(str, enum.Enum):
    """Which construction produced a coloring."""

    F_MAP = "f-map"
    LIFT = "lift"
    LOCAL_COSET = "local-coset"
    STORED_Z3Z3 = "stored-z3z3"
    Z3Z3_COSET = "z3z3-coset"
    G_MAP = "g-map"
    REG_ODD_SIGN = "reg-odd-sign"
    REG_LOCAL_COSET = "reg-local-coset"
    STORED_Z3CUBED = "stored-z3cubed"
    BLOW_UP = "blow-up"
    SOLVER = "solver"
    RESTRICTION = "restriction"


@dataclasses.dataclass(frozen=True, eq=False)
class Coloring:
    """
    Dense vertex coloring: colors[i] in 0..k-1 for vertex position i, every color used.
    """

    graph: Graph
    colors: np.ndarray
    k: int
    provenance: Provenance

    @classmethod
    def from_keys(
        cls, graph: Graph, keys: Sequence[Hashable], provenance: Provenance
    ) -> "Coloring":
        """
        Densify arbitrary per-vertex keys; color ids follow first appearance in vertex order.

        :raises VertexCountMismatchError: if there is not exactly one key per vertex.
        """
        keys = list(keys)
        if len(keys) != graph.vertex_count:
            raise VertexCountMismatchError(
                f"{len(keys)} colors for a graph on {graph.vertex_count} vertices"
            )
        ids = {}
        colors = np.array([ids.setdefault(key, len(ids)) for key in keys], dtype=np.int64)
        colors.setflags(write=False)
        return cls(graph, colors, len(ids), Provenance(provenance))

    @classmethod
    def from_classes(
        cls, graph: Graph, classes: Sequence[Sequence[int]], provenance: Provenance
    ) -> "Coloring":
        """Coloring from classes of vertex ids (ring elements)."""
        keys = [None] * graph.vertex_count
        for color, members in enumerate(classes):
            for position in graph.positions_of(members):
                keys[position] = color
        if any(key is None for key in keys):
            raise VertexCountMismatchError("color classes do not cover every vertex")
        return cls.from_keys(graph, keys, provenance)

    def classes(self) -> List[List[int]]:
        """Color classes as sorted lists of vertex ids, in color order."""
        buckets = [[] for _ in range(self.k)]
        for position, color in enumerate(self.colors):
            buckets[color].append(int(self.graph.vertices[position]))
        return [sorted(bucket) for bucket in buckets]

    def restrict(self, graph: Graph) -> "Coloring":
        """The coloring induced on a subgraph with the same vertex ids, re-densified."""
        positions = self.graph.positions_of(graph.vertices)
        return Coloring.from_keys(graph, [int(self.colors[p]) for p in positions], self.provenance)

    def serialize(self, ring: str = "", graph_kind: str = "") -> dict:
        return ColoringExport(
            ring=ring,
            graph_kind=graph_kind or self.graph.kind,
            k=self.k,
            classes=self.classes(),
            provenance=self.provenance.value,
        ).dict()


def verify_coloring(graph: Graph, coloring: Coloring) -> Verdict:
    """
    Properness check.

    :returns: (ok, witness) with the first monochromatic edge (u, v), u < v, by position.
    :rtype: Verdict
    :raises VertexCountMismatchError: if the coloring does not cover the graph.
    """
    colors = np.asarray(coloring.colors)
    if colors.shape[0] != graph.vertex_count:
        raise VertexCountMismatchError(
            f"coloring of {colors.shape[0]} vertices for a graph on {graph.vertex_count}"
        )
    same = colors[:, None] == colors[None, :]
    bad = np.argwhere(np.triu(graph.adjacency & same, 1))
    if bad.size:
        return Verdict(False, (int(bad[0][0]), int(bad[0][1])))
    return Verdict(True, None)


def blow_up_coloring(spec: BlowUpSpec, base: Coloring) -> Coloring:
    """
    Product coloring of a blow-up: vertex t of the part over b gets (color(b), t).

    Uses at most size * k colors.
    """
    graph = blow_up(spec)
    keys = [
        (int(base.colors[b]), t) for b in range(spec.base.vertex_count) for t in range(spec.size)
    ]
    return Coloring.from_keys(graph, keys, Provenance.BLOW_UP)

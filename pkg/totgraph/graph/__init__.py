"""
totgraph.graph

Simple undirected graphs over ring elements.
"""
import functools
from typing import Iterable, List, Sequence, Tuple

import networkx as nx
import numpy as np

from ..errors import TotgraphError


class Graph:
    """
    Undirected simple graph on vertex positions 0..n-1.

    `vertices[i]` is the ring element (or abstract id) at position i; `labels[i]` its printed
    form. Adjacency is a symmetric, irreflexive boolean matrix; `rows` holds the same relation
    as integer bitsets for the solvers.
    """

    def __init__(
        self,
        adjacency: np.ndarray,
        vertices: Sequence[int] = None,
        labels: Sequence[str] = None,
        ring=None,
        kind: str = "abstract",
    ):
        adjacency = np.asarray(adjacency, dtype=bool)
        if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
            raise TotgraphError(f"adjacency must be square, got shape {adjacency.shape}")
        if adjacency.diagonal().any():
            raise TotgraphError("adjacency has loops")
        if not np.array_equal(adjacency, adjacency.T):
            raise TotgraphError("adjacency is not symmetric")
        self.adjacency = adjacency
        self.adjacency.setflags(write=False)
        n = adjacency.shape[0]
        self.vertices = np.arange(n) if vertices is None else np.asarray(vertices, dtype=np.int64)
        self.labels = [str(v) for v in self.vertices] if labels is None else list(labels)
        self.ring = ring
        self.kind = kind

    def __repr__(self):
        return f"Graph({self.kind}, n={self.vertex_count}, m={self.edge_count})"

    @property
    def vertex_count(self) -> int:
        return self.adjacency.shape[0]

    def __len__(self):
        return self.vertex_count

    @functools.cached_property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    @functools.cached_property
    def rows(self) -> List[int]:
        """Neighbourhood of every position as an int bitset (bit j set iff j is adjacent)."""
        weights = [1 << j for j in range(self.vertex_count)]
        return [
            sum(weights[j] for j in np.flatnonzero(row)) for row in self.adjacency
        ]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    def neighbors(self, v: int) -> np.ndarray:
        return np.flatnonzero(self.adjacency[v])

    def degree(self, v: int) -> int:
        return int(self.adjacency[v].sum())

    def edges(self) -> List[Tuple[int, int]]:
        """All edges (u, v) with u < v, lexicographic."""
        return [(int(u), int(v)) for u, v in np.argwhere(np.triu(self.adjacency, 1))]

    def position_of(self, vertex: int) -> int:
        """Position of a ring element among the vertices."""
        matches = np.flatnonzero(self.vertices == vertex)
        if matches.size == 0:
            raise KeyError(f"{vertex} is not a vertex of {self!r}")
        return int(matches[0])

    def positions_of(self, vertices: Iterable[int]) -> List[int]:
        lookup = {int(v): i for i, v in enumerate(self.vertices)}
        return [lookup[int(v)] for v in vertices]

    def induced(self, positions: Sequence[int], kind: str = None) -> "Graph":
        """Induced subgraph on the given positions, keeping vertex ids and labels."""
        positions = np.asarray(positions, dtype=np.int64)
        return Graph(
            self.adjacency[np.ix_(positions, positions)],
            self.vertices[positions],
            [self.labels[p] for p in positions],
            ring=self.ring,
            kind=kind or self.kind,
        )

    def permuted(self, positions: Sequence[int]) -> "Graph":
        """The same graph with its vertices listed in the order of `positions`."""
        return self.induced(positions)

    def is_clique(self, positions: Iterable[int]) -> bool:
        positions = list(positions)
        sub = self.adjacency[np.ix_(positions, positions)]
        return bool(sub.sum() == len(positions) * (len(positions) - 1))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges())
        return graph

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]], **kwargs) -> "Graph":
        adjacency = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            adjacency[u, v] = adjacency[v, u] = True
        return cls(adjacency, **kwargs)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(~np.eye(n, dtype=bool), kind="complete")

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        side = np.array([0] * a + [1] * b)
        return cls(side[:, None] != side[None, :], kind="complete-bipartite")

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(np.zeros((n, n), dtype=bool), kind="empty")

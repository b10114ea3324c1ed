"""totgraph.graph.total.py"""
import logging

import networkx as nx
import numpy as np

from ..caches import check_cache, load_cache
from ..config import get_settings
from ..errors import CapExceededError, NotAnIdealError
from ..models import StructureReport
from ..ring import FiniteRing
from . import Graph

LOGGER = logging.getLogger(__name__)

SETTINGS = get_settings()


def total_graph(ring: FiniteRing) -> Graph:
    """
    T(Γ(R)): all elements, x ~ y iff x != y and x + y is a zero-divisor.

    :raises CapExceededError: above `graph_cap` vertices.
    """
    if ring.order > SETTINGS.graph_cap:
        raise CapExceededError("graph", ring.order, SETTINGS.graph_cap)
    cached = check_cache(id(ring), "total-graphs")
    if cached is not None and cached.ring is ring:
        return cached
    everything = np.arange(ring.order)
    adjacency = ring.zdiv_mask[ring.add(everything[:, None], everything[None, :])]
    np.fill_diagonal(adjacency, False)
    graph = Graph(adjacency, everything, ring.labels, ring=ring, kind="total")
    LOGGER.debug(f"T(Γ({ring})): {graph.vertex_count} vertices, {graph.edge_count} edges")
    return load_cache(id(ring), graph, "total-graphs")


def zdiv_subgraph(ring: FiniteRing) -> Graph:
    """Z(Γ(R)), induced on the zero-divisors."""
    return total_graph(ring).induced(ring.zero_divisors, kind="zdiv")


def reg_subgraph(ring: FiniteRing) -> Graph:
    """Reg(Γ(R)), induced on the regular elements."""
    return total_graph(ring).induced(ring.regular, kind="reg")


GRAPH_KINDS = {
    "total": total_graph,
    "zdiv": zdiv_subgraph,
    "reg": reg_subgraph,
}


def build_graph(ring: FiniteRing, kind: str) -> Graph:
    """
    Look up a graph builder by kind name.

    :returns: The graph.
    :rtype: Graph
    """
    return GRAPH_KINDS[kind.lower()](ring)


def check_zideal(ring: FiniteRing):
    """
    Check that Z(R) is closed under addition.

    :raises NotAnIdealError: with the first pair x <= y of zero-divisors whose sum is regular.
    """
    zdivs = ring.zero_divisors
    sums = ring.add(zdivs[:, None], zdivs[None, :])
    bad = np.argwhere(np.triu(~ring.zdiv_mask[sums]))
    if bad.size:
        i, j = bad[0]
        left, right = int(zdivs[i]), int(zdivs[j])
        raise NotAnIdealError(
            (ring.labels[left], ring.labels[right]), ring.labels[int(sums[i, j])]
        )


def structure_check_zideal(ring: FiniteRing) -> StructureReport:
    """
    Component structure of T(Γ(R)) when Z(R) is an ideal.

    With 2 in Z(R) every component is a complete graph on a coset of Z(R); otherwise Z(R) is
    one complete component and the other cosets pair up (x + Z, -x + Z) into complete
    bipartite components.

    :raises NotAnIdealError: when Z(R) is not an ideal.
    """
    check_zideal(ring)
    graph = total_graph(ring)
    union = nx.utils.UnionFind(range(graph.vertex_count))
    for u, v in graph.edges():
        union.union(u, v)
    components = sorted((sorted(part) for part in union.to_sets()), key=lambda part: part[0])

    z_size = len(ring.zero_divisors)
    quotient_size = ring.order // z_size
    two_in_z = bool(ring.zdiv_mask[ring.two])
    complete = bipartite = 0
    for part in components:
        sub = graph.induced(part)
        size = len(part)
        if size == 2 * z_size and sub.edge_count == z_size * z_size:
            nx_sub = sub.to_networkx()
            if nx.is_bipartite(nx_sub) and len(nx.bipartite.sets(nx_sub)[0]) == z_size:
                bipartite += 1
                continue
        if sub.edge_count == size * (size - 1) // 2:
            complete += 1

    if two_in_z:
        expected_complete, expected_bipartite = quotient_size, 0
        sizes_ok = all(len(part) == z_size for part in components)
    else:
        expected_complete, expected_bipartite = 1, (quotient_size - 1) // 2
        sizes_ok = all(len(part) == (z_size if 0 in part else 2 * z_size) for part in components)
    passed = (
        sizes_ok
        and len(components) == expected_complete + expected_bipartite
        and complete == expected_complete
        and bipartite == expected_bipartite
    )
    if not passed:
        LOGGER.warning(f"Z-ideal structure check failed for {ring}")
    return StructureReport(
        ring=str(ring),
        two_in_z=two_in_z,
        z_size=z_size,
        quotient_size=quotient_size,
        component_count=len(components),
        complete_components=complete,
        bipartite_components=bipartite,
        expected_complete=expected_complete,
        expected_bipartite=expected_bipartite,
        component_sizes=[len(part) for part in components],
        passed=passed,
    )

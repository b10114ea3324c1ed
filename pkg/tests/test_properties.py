"""
tests.test_properties.py

Structural properties checked over generated products of local blocks.
"""
import itertools

import networkx as nx
import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from totgraph.coloring import blow_up_coloring, verify_coloring
from totgraph.coloring.fields import total_hypothesis
from totgraph.coloring.rings import color_reg, color_reg_odd, color_total, is_z3z3
from totgraph.graph import Graph
from totgraph.graph.blowup import BlowUpSpec, blow_up, lifted_graph, quotient_blow_up_spec
from totgraph.graph.total import reg_subgraph, total_graph, zdiv_subgraph
from totgraph.ring import build_ring
from totgraph.ring.descriptor import parse_ring_spec
from totgraph.ring.structure import quotient_by_jacobson
from totgraph.solvers import chromatic_number, clique_number

from .conftest import brute_force_chromatic

BLOCKS = {
    "Z2": 2,
    "Z3": 3,
    "Z4": 4,
    "Z5": 5,
    "Z8": 8,
    "Z9": 9,
    "GF(4)": 4,
    "Z2[x]/(x^2)": 4,
    "Z3[x]/(x^2)": 9,
}
MAX_ORDER = 72

PROPERTY_SETTINGS = settings(max_examples=100, derandomize=True, deadline=None)


def _order(names):
    return int(np.prod([BLOCKS[name] for name in names]))


ring_texts = (
    st.lists(st.sampled_from(sorted(BLOCKS)), min_size=1, max_size=3)
    .filter(lambda names: _order(names) <= MAX_ORDER)
    .map(" x ".join)
)


@st.composite
def abstract_graphs(draw, max_vertices):
    n = draw(st.integers(1, max_vertices))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [pair for pair, kept in zip(pairs, keep) if kept])


@st.composite
def blow_up_specs(draw, max_vertices=8, max_size=3):
    base = draw(abstract_graphs(max_vertices))
    size = draw(st.integers(1, max_size))
    n = base.vertex_count
    complete = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return BlowUpSpec(base, size, tuple(complete))


def _covered(ring):
    return total_hypothesis(ring) != "excluded" or is_z3z3(ring)


@PROPERTY_SETTINGS
@given(ring_texts)
def test_canonical_text_is_stable(text):
    descriptor = parse_ring_spec(text)
    assert parse_ring_spec(descriptor.text) == descriptor
    assert build_ring(text).order == _order(text.split(" x "))


@PROPERTY_SETTINGS
@given(ring_texts)
def test_quotient_preserves_zero_divisors(text):
    ring = build_ring(text)
    quotient = quotient_by_jacobson(ring)
    assert np.array_equal(ring.zdiv_mask, quotient.ring.zdiv_mask[quotient.proj])
    assert quotient.ring.is_reduced


@PROPERTY_SETTINGS
@given(ring_texts, st.data())
def test_sums_are_invariant_under_jacobson_shift(text, data):
    ring = build_ring(text)
    x = data.draw(st.integers(0, ring.order - 1))
    y = data.draw(st.integers(0, ring.order - 1))
    shift = data.draw(st.sampled_from(ring.jacobson.sorted()))
    before = ring.zdiv_mask[ring.add(x, y)]
    after = ring.zdiv_mask[ring.add(ring.add(x, shift), y)]
    assert before == after


@PROPERTY_SETTINGS
@given(ring_texts)
def test_regular_elements_fill_unit_cosets(text):
    ring = build_ring(text)
    quotient = quotient_by_jacobson(ring)
    assert len(ring.regular) == quotient.coset_size * len(quotient.ring.units)
    assert len(ring.zero_divisors) == quotient.coset_size * len(quotient.ring.zero_divisors)


@PROPERTY_SETTINGS
@given(ring_texts)
def test_total_graph_is_a_blow_up_of_the_quotient(text):
    ring = build_ring(text)
    spec = quotient_blow_up_spec(ring)
    assert np.array_equal(lifted_graph(ring).adjacency, blow_up(spec).adjacency)


@PROPERTY_SETTINGS
@given(ring_texts.map(build_ring).filter(_covered))
def test_quotient_blow_up_coloring_bound(ring):
    spec = quotient_blow_up_spec(ring)
    base = color_total(quotient_by_jacobson(ring).ring)
    coloring = blow_up_coloring(spec, base)
    assert coloring.k <= spec.size * base.k
    assert verify_coloring(coloring.graph, coloring).ok


@PROPERTY_SETTINGS
@given(blow_up_specs())
def test_blow_up_chromatic_bound(spec):
    graph = blow_up(spec)
    chi = brute_force_chromatic(spec.base)
    result = chromatic_number(graph)
    assert result.exact
    assert result.value <= spec.size * chi
    coloring = blow_up_coloring(spec, chromatic_number(spec.base).coloring)
    assert verify_coloring(graph, coloring).ok
    assert coloring.k <= spec.size * chi


@PROPERTY_SETTINGS
@given(blow_up_specs(max_size=1))
def test_blow_up_with_single_vertex_parts_is_the_base(spec):
    assert np.array_equal(blow_up(spec).adjacency, spec.base.adjacency)


@PROPERTY_SETTINGS
@given(ring_texts.map(build_ring).filter(_covered))
def test_lifted_total_coloring_meets_the_clique_bound(ring):
    coloring = color_total(ring)
    assert verify_coloring(total_graph(ring), coloring).ok
    assert coloring.k >= len(ring.largest_maximal_ideal)


@PROPERTY_SETTINGS
@given(ring_texts)
def test_reg_coloring_matches_predicted_count(text):
    ring = build_ring(text)
    graph = reg_subgraph(ring)
    chars = [block.residue_char for block in ring.blocks]
    if chars[0] == 2:
        coloring = color_reg(ring)
        assert coloring.k == len(ring.units) // (ring.blocks[0].residue_size - 1)
    elif 2 not in chars:
        coloring = color_reg_odd(ring)
        assert coloring.k == 2 ** len(ring.maximal_ideals)
    else:
        return
    assert verify_coloring(graph, coloring).ok


@PROPERTY_SETTINGS
@given(ring_texts)
def test_zero_is_adjacent_to_every_other_zero_divisor(text):
    ring = build_ring(text)
    graph = zdiv_subgraph(ring)
    assert graph.degree(graph.position_of(0)) == len(ring.zero_divisors) - 1


@PROPERTY_SETTINGS
@given(ring_texts)
def test_every_maximal_ideal_is_a_clique(text):
    ring = build_ring(text)
    graph = total_graph(ring)
    for ideal in ring.maximal_ideals:
        assert graph.is_clique(graph.positions_of(ideal.sorted()))


@PROPERTY_SETTINGS
@given(abstract_graphs(20))
def test_solvers_match_brute_force_on_random_graphs(graph):
    result = chromatic_number(graph)
    assert result.value == brute_force_chromatic(graph)
    assert verify_coloring(graph, result.coloring).ok
    _, omega = nx.max_weight_clique(graph.to_networkx(), weight=None)
    clique = clique_number(graph)
    assert clique.size == omega
    assert graph.is_clique(graph.positions_of(clique.vertices))


@PROPERTY_SETTINGS
@given(abstract_graphs(12))
def test_solvers_are_deterministic(graph):
    first, second = chromatic_number(graph), chromatic_number(graph)
    assert (first.lower, first.upper) == (second.lower, second.upper)
    assert np.array_equal(first.coloring.colors, second.coloring.colors)
    assert clique_number(graph).vertices == clique_number(graph).vertices

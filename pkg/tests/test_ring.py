"""tests.test_ring.py"""
import numpy as np
import pytest

from totgraph.errors import BlockNotLocalError, CapExceededError, RingBuildError
from totgraph.ring import (
    build_ring,
    find_irreducible,
    jacobson,
    maximal_ideals,
    nilradical,
    realize_block,
    zero_divisors,
)
from totgraph.ring.blocks import LocalBlock
from totgraph.ring.descriptor import field_block

AXIOM_RINGS = [
    "Z6",
    "Z2 x Z4",
    "GF(4)",
    "GF(9)",
    "Z2[x]/(x^2)",
    "Z4[x]/(x^2+x+1)",
    "Z3 x Z2[x]/(x^3)",
]


@pytest.mark.parametrize(
    "p, k, expected",
    [
        (2, 1, (1, 0)),
        (2, 2, (1, 1, 1)),
        (3, 2, (1, 0, 1)),
        (2, 3, (1, 0, 1, 1)),
        (5, 2, (1, 0, 2)),
    ],
)
def test_find_irreducible(p, k, expected):
    assert find_irreducible(p, k) == expected


def test_find_irreducible_rejects_composite():
    with pytest.raises(RingBuildError):
        find_irreducible(4, 2)


def test_local_block_tables():
    block = LocalBlock.integers(4)
    assert block.one == 1
    assert block.neg.tolist() == [0, 3, 2, 1]
    assert block.nonunits.tolist() == [0, 2]
    assert block.characteristic == 4
    assert block.residue_char == 2
    assert block.residue_size == 2
    assert block.negation_pairs() == [(1, 3)]


def test_polynomial_block_labels():
    block = realize_block(field_block(2, 2))
    assert block.labels == ["0", "1", "x", "x+1"]
    assert block.is_field
    # x * x = x + 1 modulo x^2 + x + 1
    assert block.labels[block.mul[2, 2]] == "x+1"


def test_residue_field_of_z9():
    field, class_of = LocalBlock.integers(9).residue_field()
    assert field.order == 3
    assert field.labels == ["0", "1", "2"]
    assert class_of.tolist() == [0, 1, 2] * 3
    assert field.is_field


def test_block_not_local():
    with pytest.raises(BlockNotLocalError) as exc_info:
        build_ring("Z2[x]/(x^2+x)")
    assert exc_info.value.witness == ("x", "x+1")
    assert "block not local" in str(exc_info.value)


def test_ring_cap():
    with pytest.raises(CapExceededError) as exc_info:
        build_ring("GF(4096) x Z2")
    assert exc_info.value.size == 8192


@pytest.mark.parametrize("text", AXIOM_RINGS)
def test_ring_axioms(text):
    ring = build_ring(text)
    x = np.arange(ring.order)
    a, b, c = x[:, None, None], x[None, :, None], x[None, None, :]
    assert np.array_equal(ring.add(x[:, None], x[None, :]), ring.add(x[None, :], x[:, None]))
    assert np.array_equal(ring.mul(x[:, None], x[None, :]), ring.mul(x[None, :], x[:, None]))
    assert np.array_equal(ring.add(ring.add(a, b), c), ring.add(a, ring.add(b, c)))
    assert np.array_equal(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c)))
    assert np.array_equal(ring.mul(a, ring.add(b, c)), ring.add(ring.mul(a, b), ring.mul(a, c)))
    assert np.array_equal(ring.add(x, 0), x)
    assert np.array_equal(ring.mul(x, 1), x)
    assert (ring.add(x, ring.neg(x)) == 0).all()


@pytest.mark.parametrize(
    "text, expected",
    [
        ("Z6", [0, 2, 3, 4]),
        ("Z4", [0, 2]),
        ("GF(8)", [0]),
        ("Z9", [0, 3, 6]),
    ],
)
def test_zero_divisors(text, expected):
    ring = build_ring(text)
    assert sorted(zero_divisors(ring)) == expected


@pytest.mark.parametrize("text", AXIOM_RINGS + ["Z3 x Z3", "Z2 x Z2 x Z3"])
def test_units_and_zero_divisors_partition(text):
    ring = build_ring(text)
    assert len(ring.units) + len(ring.zero_divisors) == ring.order
    assert not set(ring.units.tolist()) & set(ring.zero_divisors.tolist())
    union = set().union(*(ideal.members for ideal in ring.maximal_ideals))
    assert union == set(ring.zero_divisors.tolist())
    assert len(ring.maximal_ideals) == len(ring.descriptor.blocks)
    assert all(ideal.is_ideal() for ideal in ring.maximal_ideals)
    assert jacobson(ring).members == nilradical(ring).members
    assert ring.regular.tolist() == ring.units.tolist()


def test_gf4_is_a_field():
    ring = build_ring("GF(4)")
    assert ring.order == 4
    assert ring.is_field
    assert ring.units.tolist() == [1, 2, 3]


def test_z6_structure():
    ring = build_ring("Z6")
    assert ring.units.tolist() == [1, 5]
    assert [ideal.sorted() for ideal in maximal_ideals(ring)] == [[0, 2, 4], [0, 3]]
    assert [ideal.residue_size for ideal in ring.maximal_ideals] == [2, 3]
    assert nilradical(ring).sorted() == [0]
    assert ring.is_reduced
    assert ring.index_of(5) == 5
    assert ring.labels[:3] == ["0", "1", "2"]


@pytest.mark.parametrize(
    "text, nil",
    [
        ("Z4", ["0", "2"]),
        ("Z6", ["0"]),
        ("Z2[x]/(x^2)", ["0", "x"]),
        ("Z2 x Z4", ["(0,0)", "(0,2)"]),
        ("Z8", ["0", "2", "4", "6"]),
    ],
)
def test_nilradical(text, nil):
    ring = build_ring(text)
    assert sorted(ring.labels[x] for x in nilradical(ring)) == sorted(nil)
    assert nilradical(ring).tag == "nilradical"
    assert jacobson(ring).tag == "jacobson"


@pytest.mark.parametrize(
    "text, sizes",
    [("Z6", [3, 2]), ("Z9", [3]), ("Z3 x Z3", [3, 3]), ("Z4 x GF(9)", [18, 4])],
)
def test_maximal_ideal_sizes(text, sizes):
    assert [len(ideal) for ideal in build_ring(text).maximal_ideals] == sizes


def test_identity_is_index_one():
    ring = build_ring("Z2 x Z4")
    assert ring.index_of((1, 1)) == 1
    assert ring.labels[1] == "(1,1)"
    assert ring.index_of("(1,1)") == 1
    assert ring.two == ring.index_of((0, 2))
    with pytest.raises(KeyError):
        ring.index_of("(2,2)")


def test_power():
    ring = build_ring("Z9")
    assert ring.power(2, 6) == 1
    assert ring.power(3, 2) == 0
    assert ring.power(4, 0) == 1


def test_serialize():
    info = build_ring("Z6").serialize()
    assert info["ring"] == "Z6"
    assert info["order"] == 6
    assert info["blocks"] == ["Z2", "Z3"]
    assert info["zero_divisors"] == [0, 2, 3, 4]
    assert info["jacobson"] == [0]
    assert [ideal["residue_size"] for ideal in info["maximal_ideals"]] == [2, 3]


def test_build_ring_is_cached():
    assert build_ring("Z4 x Z3") is build_ring("Z4 x Z3")

"""tests.test_structure.py"""
import pytest

from totgraph.errors import CapExceededError
from totgraph.ring import build_ring
from totgraph.ring.structure import idempotent_decompose, quotient_by_jacobson


@pytest.mark.parametrize(
    "text, orders",
    [
        ("Z6", [2, 3]),
        ("Z4", [4]),
        ("Z2 x Z2 x Z3", [2, 2, 3]),
        ("Z12", [3, 4]),
        ("GF(4) x Z2[x]/(x^2)", [4, 4]),
    ],
)
def test_idempotent_decompose(text, orders):
    components = idempotent_decompose(build_ring(text))
    assert sorted(component.order for component in components) == orders
    for component in components:
        assert component.block.nonunits.size * component.block.residue_size == component.order


def test_idempotent_decompose_z6_idempotents():
    components = idempotent_decompose(build_ring("Z6"))
    assert sorted(component.idempotent for component in components) == [3, 4]
    assert sorted(component.members for component in components) == [(0, 2, 4), (0, 3)]


def test_idempotent_decompose_cap():
    with pytest.raises(CapExceededError):
        idempotent_decompose(build_ring("Z1024"))


@pytest.mark.parametrize(
    "text, quotient_order, field_sizes",
    [
        ("Z4", 2, [2]),
        ("Z8", 2, [2]),
        ("Z6", 6, [2, 3]),
        ("Z2 x Z4", 4, [2, 2]),
        ("Z9 x Z2[x]/(x^2)", 6, [2, 3]),
        ("Z4[x]/(x^2+x+1)", 4, [4]),
    ],
)
def test_quotient_by_jacobson(text, quotient_order, field_sizes):
    ring = build_ring(text)
    quotient = quotient_by_jacobson(ring)
    assert quotient.ring.order == quotient_order
    assert quotient.ring.order * quotient.coset_size == ring.order
    assert [field.order for field in quotient.ring.blocks] == field_sizes
    assert quotient.ring.is_reduced
    assert (quotient.ring.zdiv_mask[quotient.proj] == ring.zdiv_mask).all()


def test_quotient_projection_z4():
    quotient = quotient_by_jacobson(build_ring("Z4"))
    assert quotient.proj.tolist() == [0, 1, 0, 1]
    assert quotient.position.tolist() == [0, 0, 1, 1]
    assert quotient.lift(1, 1) == 3
    assert quotient.coset_order().tolist() == [0, 2, 1, 3]


def test_quotient_is_a_homomorphism():
    ring = build_ring("Z2 x Z8")
    quotient = quotient_by_jacobson(ring)
    s, proj = quotient.ring, quotient.proj
    for x in range(ring.order):
        for y in range(ring.order):
            assert proj[ring.add(x, y)] == s.add(proj[x], proj[y])
            assert proj[ring.mul(x, y)] == s.mul(proj[x], proj[y])


def test_cosets_are_jacobson_translates():
    ring = build_ring("Z9 x Z2")
    quotient = quotient_by_jacobson(ring)
    jacobson = ring.jacobson.sorted()
    for x in range(ring.order):
        coset = sorted(int(ring.add(x, j)) for j in jacobson)
        members = [y for y in range(ring.order) if quotient.proj[y] == quotient.proj[x]]
        assert coset == members

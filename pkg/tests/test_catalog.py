"""tests.test_catalog.py"""
import pytest

from totgraph.catalog import generate_catalog, parse_pool
from totgraph.config import DEFAULT_POOL
from totgraph.errors import CapExceededError, TotgraphError
from totgraph.ring.descriptor import integer_block

CATALOG_PARAMS = (
    "pool, max_order, expected",
    [
        (["Z2", "Z3"], 9, ["Z2", "Z3", "Z2 x Z2", "Z2 x Z3", "Z3 x Z3", "Z2 x Z2 x Z2"]),
        (["Z4"], 4, ["Z4"]),
        (["Z2", "GF(4)"], 8, ["Z2", "GF(4)", "Z2 x Z2", "Z2 x GF(4)", "Z2 x Z2 x Z2"]),
        (["GF(4)", "Z2"], 8, ["Z2", "GF(4)", "Z2 x Z2", "Z2 x GF(4)", "Z2 x Z2 x Z2"]),
        (["Z6"], 6, ["Z2", "Z3", "Z2 x Z2", "Z2 x Z3"]),
        (["Z2", "Z2", "Z3"], 3, ["Z2", "Z3"]),
    ],
)


@pytest.mark.parametrize(*CATALOG_PARAMS)
def test_generate_catalog(pool, max_order, expected):
    catalog = generate_catalog(pool, max_order)
    assert catalog.texts() == expected
    assert len(catalog) == len(expected)
    assert all(ring.order <= max_order for ring in catalog)


def test_catalog_is_deterministic():
    first = generate_catalog(DEFAULT_POOL, 64)
    second = generate_catalog(list(reversed(DEFAULT_POOL)), 64)
    assert first.texts() == second.texts()
    assert len(set(first.texts())) == len(first)


def test_catalog_texts_are_canonical():
    for descriptor in generate_catalog(DEFAULT_POOL, 32):
        assert descriptor.source_text == descriptor.text


def test_parse_pool():
    expected = (integer_block(2, 1), integer_block(3, 1))
    assert parse_pool(["Z3", integer_block(2, 1), "Z3"]) == expected


def test_empty_pool():
    with pytest.raises(TotgraphError):
        generate_catalog([], 10)


def test_max_order_cap():
    with pytest.raises(CapExceededError):
        generate_catalog(["Z2"], 5000)

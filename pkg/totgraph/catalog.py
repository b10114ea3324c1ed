"""totgraph.catalog.py"""
import dataclasses
import itertools
import logging
from typing import Iterator, List, Sequence, Tuple, Union

from .config import get_settings
from .errors import CapExceededError, TotgraphError
from .ring.descriptor import BlockDescriptor, RingDescriptor, parse_ring_spec

LOGGER = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class RingCatalog:
    """
    Every product of pool blocks with order <= max_order, one canonical descriptor each.

    Rings are listed by number of blocks, then in pool order.
    """

    pool: Tuple[BlockDescriptor, ...]
    max_order: int
    rings: Tuple[RingDescriptor, ...]

    def __iter__(self) -> Iterator[RingDescriptor]:
        return iter(self.rings)

    def __len__(self) -> int:
        return len(self.rings)

    def texts(self) -> List[str]:
        return [ring.text for ring in self.rings]


def parse_pool(pool: Sequence[Union[str, BlockDescriptor]]) -> Tuple[BlockDescriptor, ...]:
    """Blocks of the pool entries, deduplicated and in canonical order."""
    blocks = set()
    for entry in pool:
        if isinstance(entry, BlockDescriptor):
            blocks.add(entry)
        else:
            blocks.update(parse_ring_spec(entry).blocks)
    return tuple(sorted(blocks, key=BlockDescriptor.sort_key))


def generate_catalog(pool: Sequence[Union[str, BlockDescriptor]], max_order: int) -> RingCatalog:
    """
    All multisets of pool blocks with product order <= max_order.

    :raises TotgraphError: for an empty pool.
    :raises CapExceededError: when max_order exceeds `arithmetic_cap`.
    """
    blocks = parse_pool(pool)
    if not blocks:
        raise TotgraphError("the block pool is empty")
    cap = get_settings().arithmetic_cap
    if max_order > cap:
        raise CapExceededError("catalog max order", max_order, cap)

    seen, rings = set(), []
    smallest = min(block.order for block in blocks)
    count = 1
    while smallest**count <= max_order:
        for combination in itertools.combinations_with_replacement(blocks, count):
            order = 1
            for block in combination:
                order *= block.order
            if order > max_order:
                continue
            descriptor = RingDescriptor.from_blocks(combination)
            if descriptor.blocks not in seen:
                seen.add(descriptor.blocks)
                rings.append(descriptor)
        count += 1
    LOGGER.info(f"catalog of {len(rings)} rings from {len(blocks)} blocks up to order {max_order}")
    return RingCatalog(blocks, max_order, tuple(rings))

"""
totgraph.ring

Finite commutative rings realized as products of local blocks.
"""
import dataclasses
import functools
import logging
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..caches import check_cache, load_cache
from ..config import get_settings
from ..errors import ArithmeticConsistencyError, CapExceededError
from ..models import MaximalIdealInfo, RingInfo
from .blocks import LocalBlock, find_irreducible, realize_block
from .descriptor import (
    BlockDescriptor,
    Factor,
    RingDescriptor,
    field_block,
    integer_block,
    parse_ring_spec,
    poly_block,
)

LOGGER = logging.getLogger(__name__)

SETTINGS = get_settings()

SCAN_CHUNK = 256


@dataclasses.dataclass(frozen=True)
class IdealSet:
    """
    An ideal of a ring, as a set of element indices.

    `tag` is one of maximal, jacobson, nilradical, custom. Maximal ideals also carry the
    block they come from and their residue field size and characteristic.
    """

    ring: "FiniteRing" = dataclasses.field(compare=False, repr=False)
    members: FrozenSet[int]
    tag: str = "custom"
    block: Optional[int] = None
    residue_size: Optional[int] = None
    residue_char: Optional[int] = None

    def __contains__(self, element) -> bool:
        return int(element) in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def sorted(self) -> List[int]:
        return sorted(self.members)

    def is_ideal(self) -> bool:
        """Contains 0 and is closed under addition and under multiplication by the ring."""
        members = np.array(self.sorted())
        mask = self.ring.mask_of(members)
        if not mask[0]:
            return False
        sums = self.ring.add(members[:, None], members[None, :])
        products = self.ring.mul(np.arange(self.ring.order)[:, None], members[None, :])
        return bool(mask[sums].all() and mask[products].all())


class FiniteRing:
    """
    A finite commutative ring with unity, enumerated as element indices 0..order-1.

    Index 0 is zero and index 1 is one (for order > 1). Element order is mixed radix over the
    factors of the spec as written, the last factor varying fastest; a composite ``Z n`` factor
    runs through the residues 0..n-1. The identity is then moved to index 1.

    Instances are immutable; derived sets are computed once on first access.
    """

    def __init__(self, descriptor: RingDescriptor, blocks: Sequence[LocalBlock] = None):
        self.descriptor = descriptor
        self.blocks = list(blocks) if blocks is not None else [
            realize_block(block) for block in descriptor.blocks
        ]
        self.order = descriptor.order
        factors = descriptor.factors or tuple(Factor(b.text, (b,)) for b in descriptor.blocks)

        positions = self._canonical_positions(factors)
        shape = [factor.order for factor in factors]
        values = np.stack(np.unravel_index(np.arange(self.order), shape), axis=1)
        digits = np.zeros((self.order, len(self.blocks)), dtype=np.int64)
        slot = 0
        for column, factor in enumerate(factors):
            for block in factor.blocks:
                position = positions[slot]
                if factor.modulus:
                    digits[:, position] = values[:, column] % block.order
                else:
                    digits[:, position] = values[:, column]
                slot += 1

        labels = [self._label(factors, positions, row) for row in values]
        one = np.array([block.one for block in self.blocks])
        identity = int(np.flatnonzero((digits == one).all(axis=1))[0]) if self.order > 1 else 0
        if identity > 1:
            digits[[1, identity]] = digits[[identity, 1]]
            values[[1, identity]] = values[[identity, 1]]
            labels[1], labels[identity] = labels[identity], labels[1]

        self.digits = digits
        self.digits.setflags(write=False)
        self.labels = labels
        orders = [block.order for block in self.blocks]
        self.strides = np.array(
            [int(np.prod(orders[i + 1 :])) for i in range(len(orders))], dtype=np.int64
        )
        self._code_to_index = np.empty(self.order, dtype=np.int64)
        self._code_to_index[digits @ self.strides] = np.arange(self.order)
        self._by_value = {tuple(int(v) for v in row): i for i, row in enumerate(values)}
        if len(factors) == 1:
            self._by_value.update({int(row[0]): i for i, row in enumerate(values)})
        self._by_label = {label: i for i, label in enumerate(labels)}

    @staticmethod
    def _canonical_positions(factors: Sequence[Factor]) -> List[int]:
        """Canonical block position of every factor block, in factor order."""
        source = [block for factor in factors for block in factor.blocks]
        ranked = sorted(range(len(source)), key=lambda i: source[i].sort_key())
        positions = [0] * len(source)
        for position, slot in enumerate(ranked):
            positions[slot] = position
        return positions

    def _label(self, factors, positions, row) -> str:
        parts, slot = [], 0
        for column, factor in enumerate(factors):
            value = int(row[column])
            if factor.modulus:
                parts.append(str(value))
            else:
                parts.append(self.blocks[positions[slot]].labels[value])
            slot += len(factor.blocks)
        return parts[0] if len(parts) == 1 else "(" + ",".join(parts) + ")"

    def __repr__(self):
        text = self.descriptor.source_text or self.descriptor.text
        return f"FiniteRing({text}, order={self.order})"

    def __str__(self):
        return self.descriptor.source_text or self.descriptor.text

    @property
    def name(self) -> str:
        return str(self)

    # ################
    # Arithmetic
    # ################

    def encode(self, digits: np.ndarray) -> np.ndarray:
        """Element indices of rows of block digits."""
        return self._code_to_index[np.asarray(digits) @ self.strides]

    def _combine(self, tables, left, right):
        left, right = np.asarray(left), np.asarray(right)
        code = 0
        for b, table in enumerate(tables):
            code = code + table[self.digits[left, b], self.digits[right, b]] * self.strides[b]
        return self._code_to_index[code]

    def add(self, left, right):
        """Sum of element indices; arrays broadcast."""
        return self._combine([block.add for block in self.blocks], left, right)

    def mul(self, left, right):
        """Product of element indices; arrays broadcast."""
        return self._combine([block.mul for block in self.blocks], left, right)

    def neg(self, element):
        element = np.asarray(element)
        code = 0
        for b, block in enumerate(self.blocks):
            code = code + block.neg[self.digits[element, b]] * self.strides[b]
        return self._code_to_index[code]

    def sub(self, left, right):
        return self.add(left, self.neg(right))

    def power(self, element: int, exponent: int) -> int:
        result, base = 1 if self.order > 1 else 0, int(element)
        while exponent:
            if exponent & 1:
                result = int(self.mul(result, base))
            base = int(self.mul(base, base))
            exponent >>= 1
        return result

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1 if self.order > 1 else 0

    @functools.cached_property
    def two(self) -> int:
        return int(self.add(self.one, self.one))

    def mask_of(self, members) -> np.ndarray:
        """Boolean membership mask of a collection of element indices."""
        mask = np.zeros(self.order, dtype=bool)
        mask[np.asarray(list(members), dtype=np.int64)] = True
        return mask

    def index_of(self, value: Union[int, str, Tuple]) -> int:
        """
        Element index of a label value: an integer for a single ``Z n`` factor, a tuple of
        factor values, or a printed label such as ``(1,x+1)``.
        """
        if isinstance(value, str):
            if value in self._by_label:
                return self._by_label[value]
        else:
            key = tuple(value) if isinstance(value, (tuple, list)) else int(value)
            if key in self._by_value:
                return self._by_value[key]
        raise KeyError(f"{value!r} is not an element of {self}")

    # ################
    # Derived structure
    # ################

    def _scan(self):
        """Exhaustive product scan: (zero-divisor mask, unit mask)."""
        everything = np.arange(self.order)
        zdiv = np.zeros(self.order, dtype=bool)
        unit = np.zeros(self.order, dtype=bool)
        for start in range(0, self.order, SCAN_CHUNK):
            rows = everything[start : start + SCAN_CHUNK]
            products = self.mul(rows[:, None], everything[None, :])
            zdiv[rows] = (products[:, 1:] == 0).any(axis=1)
            unit[rows] = (products == self.one).any(axis=1)
        zdiv[0] = True
        return zdiv, unit

    @functools.cached_property
    def _masks(self):
        zdiv, unit = self._scan()
        if (zdiv & unit).any() or not (zdiv | unit).all():
            raise ArithmeticConsistencyError(
                f"units and zero-divisors of {self} do not partition it"
            )
        structural = np.zeros(self.order, dtype=bool)
        for b, block in enumerate(self.blocks):
            structural |= ~block.unit_mask[self.digits[:, b]]
        if not np.array_equal(zdiv, structural):
            raise ArithmeticConsistencyError(
                f"Z({self}) differs from the union of its maximal ideals"
            )
        return zdiv, unit

    @property
    def zdiv_mask(self) -> np.ndarray:
        return self._masks[0]

    @property
    def unit_mask(self) -> np.ndarray:
        return self._masks[1]

    @functools.cached_property
    def zero_divisors(self) -> np.ndarray:
        """Z(R), sorted element indices (0 included)."""
        return np.flatnonzero(self.zdiv_mask)

    @functools.cached_property
    def units(self) -> np.ndarray:
        return np.flatnonzero(self.unit_mask)

    @property
    def regular(self) -> np.ndarray:
        """Reg(R); in a finite ring the regular elements are the units."""
        return self.units

    @property
    def nonzero_zero_divisors(self) -> np.ndarray:
        return self.zero_divisors[1:]

    @functools.cached_property
    def nil_mask(self) -> np.ndarray:
        values = np.arange(self.order)
        for _ in range(max(self.order.bit_length(), 1)):
            values = self.mul(values, values)
        return values == 0

    @functools.cached_property
    def maximal_ideals(self) -> List[IdealSet]:
        """One maximal ideal per block, sorted by size descending (ties in block order)."""
        ideals = []
        for b, block in enumerate(self.blocks):
            members = np.flatnonzero(~block.unit_mask[self.digits[:, b]])
            ideals.append(
                IdealSet(
                    self,
                    frozenset(int(m) for m in members),
                    "maximal",
                    block=b,
                    residue_size=block.residue_size,
                    residue_char=block.residue_char,
                )
            )
        return sorted(ideals, key=lambda ideal: -len(ideal))

    @functools.cached_property
    def nilradical(self) -> IdealSet:
        members = frozenset(int(m) for m in np.flatnonzero(self.nil_mask))
        return IdealSet(self, members, "nilradical")

    @functools.cached_property
    def jacobson(self) -> IdealSet:
        """Intersection of the maximal ideals; must agree with the nilradical."""
        members = frozenset(range(self.order))
        for ideal in self.maximal_ideals:
            members &= ideal.members
        if members != self.nilradical.members:
            raise ArithmeticConsistencyError(f"Nil({self}) != J({self})")
        return IdealSet(self, members, "jacobson")

    @functools.cached_property
    def residue_fields(self) -> List[Tuple[LocalBlock, np.ndarray]]:
        """(field, class map) of every block, in block order."""
        return [block.residue_field() for block in self.blocks]

    @property
    def is_reduced(self) -> bool:
        return len(self.nilradical) == 1

    @property
    def is_local(self) -> bool:
        return len(self.blocks) == 1

    @property
    def is_field(self) -> bool:
        return self.is_local and self.blocks[0].is_field

    @property
    def largest_maximal_ideal(self) -> IdealSet:
        return self.maximal_ideals[0]

    def serialize(self) -> dict:
        """Machine-readable summary (element indices)."""
        return RingInfo(
            ring=str(self),
            order=self.order,
            blocks=[block.text for block in self.descriptor.blocks],
            zero_divisors=[int(z) for z in self.zero_divisors],
            units=[int(u) for u in self.units],
            jacobson=self.jacobson.sorted(),
            maximal_ideals=[
                MaximalIdealInfo(
                    members=ideal.sorted(),
                    residue_size=ideal.residue_size,
                    residue_char=ideal.residue_char,
                )
                for ideal in self.maximal_ideals
            ],
            labels=self.labels,
        ).dict()


def build_ring(descriptor: Union[RingDescriptor, str]) -> FiniteRing:
    """
    Realize a descriptor (or spec text) as a FiniteRing.

    :raises CapExceededError: when the order exceeds `arithmetic_cap`.
    :raises BlockNotLocalError: when a block is not local.
    """
    if isinstance(descriptor, str):
        descriptor = parse_ring_spec(descriptor)
    if descriptor.order > SETTINGS.arithmetic_cap:
        raise CapExceededError("ring", descriptor.order, SETTINGS.arithmetic_cap)
    key = (descriptor.blocks, descriptor.factors)
    ring = check_cache(key, "rings")
    if ring is None:
        ring = load_cache(key, FiniteRing(descriptor), "rings")
        LOGGER.info(f"built ring {ring} of order {ring.order}")
    return ring


def zero_divisors(ring: FiniteRing) -> FrozenSet[int]:
    """Z(R) by exhaustive product scan, cross-checked against the maximal ideals."""
    return frozenset(int(z) for z in ring.zero_divisors)


def nilradical(ring: FiniteRing) -> IdealSet:
    """Nil(R): elements x with x^(2^t) = 0 for 2^t >= |R|."""
    return ring.nilradical


def jacobson(ring: FiniteRing) -> IdealSet:
    """J(R); raises ArithmeticConsistencyError if it differs from Nil(R)."""
    return ring.jacobson


def maximal_ideals(ring: FiniteRing) -> List[IdealSet]:
    return ring.maximal_ideals


__all__ = [
    "BlockDescriptor",
    "FiniteRing",
    "IdealSet",
    "LocalBlock",
    "RingDescriptor",
    "build_ring",
    "field_block",
    "find_irreducible",
    "integer_block",
    "jacobson",
    "maximal_ideals",
    "nilradical",
    "parse_ring_spec",
    "poly_block",
    "realize_block",
    "zero_divisors",
]

"""totgraph.ring.blocks.py"""
import functools
import itertools
import logging
from typing import List, Sequence, Tuple

import numpy as np

from ..caches import check_cache, load_cache
from ..config import get_settings
from ..errors import BlockNotLocalError, CapExceededError, RingBuildError
from ..utils.numbers import is_prime, prime_power
from .descriptor import BlockDescriptor, poly_text

LOGGER = logging.getLogger(__name__)

SETTINGS = get_settings()


class LocalBlock:
    """
    A finite commutative ring with materialized Cayley tables.

    Elements are the indices 0..order-1; index 0 is the additive identity.
    """

    def __init__(self, name: str, add: np.ndarray, mul: np.ndarray, labels: Sequence[str]):
        self.name = name
        self.add = add
        self.mul = mul
        self.labels = list(labels)
        self.order = len(self.labels)
        self.add.setflags(write=False)
        self.mul.setflags(write=False)

    def __repr__(self):
        return f"LocalBlock({self.name}, order={self.order})"

    def __str__(self):
        return self.name

    @functools.cached_property
    def neg(self) -> np.ndarray:
        """Additive inverse of every element."""
        return np.argmax(self.add == 0, axis=1)

    @functools.cached_property
    def one(self) -> int:
        """Index of the multiplicative identity."""
        identity = np.flatnonzero((self.mul == np.arange(self.order)).all(axis=1))
        if identity.size == 0:
            raise RingBuildError(f"{self.name} has no multiplicative identity")
        return int(identity[0])

    @functools.cached_property
    def unit_mask(self) -> np.ndarray:
        return (self.mul == self.one).any(axis=1)

    @functools.cached_property
    def nonunits(self) -> np.ndarray:
        """Sorted indices of the non-units (the maximal ideal of a local block)."""
        return np.flatnonzero(~self.unit_mask)

    @property
    def is_field(self) -> bool:
        return self.nonunits.size == 1

    @property
    def residue_size(self) -> int:
        return self.order // self.nonunits.size

    @functools.cached_property
    def characteristic(self) -> int:
        """Additive order of the identity."""
        value, count = self.one, 1
        while value != 0:
            value = int(self.add[value, self.one])
            count += 1
        return count

    @property
    def residue_char(self) -> int:
        return prime_power(self.characteristic)[0]

    def check_local(self):
        """
        Verify the non-units form an ideal.

        :raises BlockNotLocalError: with the first pair of non-units whose sum is a unit.
        """
        nonunits = self.nonunits
        sums = self.add[np.ix_(nonunits, nonunits)]
        bad = np.argwhere(self.unit_mask[sums])
        if bad.size:
            left, right = nonunits[bad[0]]
            raise BlockNotLocalError(self.name, (self.labels[left], self.labels[right]))
        products = self.mul[:, nonunits]
        bad = np.argwhere(self.unit_mask[products])
        if bad.size:
            left, right = bad[0][0], nonunits[bad[0][1]]
            raise BlockNotLocalError(self.name, (self.labels[left], self.labels[right]))
        return self

    def residue_field(self) -> Tuple["LocalBlock", np.ndarray]:
        """
        The residue field block/N as a table block.

        Cosets are numbered by their smallest member; each coset takes that member's label.

        :returns: (field, class_of) where class_of maps block elements to field elements.
        :rtype: Tuple[LocalBlock, np.ndarray]
        """
        coset_min = self.add[:, self.nonunits].min(axis=1)
        reps = np.unique(coset_min)
        class_of = np.searchsorted(reps, coset_min)
        add = class_of[self.add[np.ix_(reps, reps)]]
        mul = class_of[self.mul[np.ix_(reps, reps)]]
        field = LocalBlock(f"{self.name}/N", add, mul, [self.labels[r] for r in reps])
        return field, class_of

    def negation_pairs(self, members: Sequence[int] = None) -> List[Tuple[int, int]]:
        """
        Pairs {a, -a} with a != -a among `members`, lower index first, ordered by it.
        """
        members = range(self.order) if members is None else members
        pairs = []
        for value in members:
            partner = int(self.neg[value])
            if value < partner:
                pairs.append((int(value), partner))
        return pairs

    @classmethod
    def integers(cls, n: int) -> "LocalBlock":
        """Z_n with its integer residues as elements."""
        values = np.arange(n)
        add = np.add.outer(values, values) % n
        mul = np.multiply.outer(values, values) % n
        return cls(f"Z{n}", add, mul, [str(v) for v in values])

    @classmethod
    def polynomial(cls, q: int, modulus: Tuple[int, ...], name: str = None) -> "LocalBlock":
        """
        Z_q[x]/(modulus) for a monic modulus given high degree first.

        Element index is sum(c_i * q^i) over the coefficient c_i of x^i.
        """
        degree = len(modulus) - 1
        order = q ** degree
        weights = q ** np.arange(degree)
        coeffs = (np.arange(order)[:, None] // weights) % q

        add = np.zeros((order, order), dtype=np.int64)
        for i in range(degree):
            add += ((coeffs[:, i, None] + coeffs[None, :, i]) % q) * weights[i]

        companion = np.zeros((degree, degree), dtype=np.int64)
        for i in range(degree - 1):
            companion[i + 1, i] = 1
        for j in range(degree):
            companion[j, degree - 1] = (-modulus[degree - j]) % q
        shifted = [coeffs]
        for _ in range(degree - 1):
            shifted.append((shifted[-1] @ companion.T) % q)
        mul = np.zeros((order, order), dtype=np.int64)
        for j in range(degree):
            column = np.stack([block[:, j] for block in shifted])
            mul += ((coeffs @ column) % q) * weights[j]

        labels = [poly_text(tuple(row[::-1])) for row in coeffs]
        name = name or f"Z{q}[x]/({poly_text(modulus)})"
        return cls(name, add, mul, labels)


def _poly_remainder(numerator: Sequence[int], divisor: Sequence[int], p: int) -> List[int]:
    """Remainder of a polynomial division mod p by a monic divisor (high degree first)."""
    remainder = [c % p for c in numerator]
    while len(remainder) >= len(divisor):
        lead = remainder[0]
        if lead:
            for i, coef in enumerate(divisor):
                remainder[i] = (remainder[i] - lead * coef) % p
        remainder.pop(0)
    return remainder


def _is_irreducible(candidate: Tuple[int, ...], p: int) -> bool:
    degree = len(candidate) - 1
    for divisor_degree in range(1, degree // 2 + 1):
        for tail in itertools.product(range(p), repeat=divisor_degree):
            if not any(_poly_remainder(candidate, (1,) + tail, p)):
                return False
    return True


def find_irreducible(p: int, k: int) -> Tuple[int, ...]:
    """
    Lexicographically smallest monic irreducible polynomial of degree k over Z_p.

    Coefficients are returned high degree first; candidates are compared on that tuple.

    :returns: The coefficient tuple, e.g. (1, 1, 1) for x^2+x+1 over Z_2.
    :rtype: Tuple[int, ...]
    """
    if not is_prime(p) or k < 1:
        raise RingBuildError(f"find_irreducible needs a prime p and k >= 1, got ({p}, {k})")
    cached = check_cache((p, k), "irreducible")
    if cached is not None:
        return cached
    for tail in itertools.product(range(p), repeat=k):
        candidate = (1,) + tail
        if _is_irreducible(candidate, p):
            LOGGER.debug(f"irreducible of degree {k} over Z{p}: {poly_text(candidate)}")
            return load_cache((p, k), candidate, "irreducible")
    raise RingBuildError(f"no irreducible polynomial of degree {k} over Z{p}")  # pragma: no cover


def realize_block(descriptor: BlockDescriptor) -> LocalBlock:
    """
    Realize a block descriptor as a verified local block.

    :raises CapExceededError: when the block order exceeds `block_cap`.
    :raises BlockNotLocalError: when the non-units are not an ideal.
    """
    if descriptor.order > SETTINGS.block_cap:
        raise CapExceededError("block", descriptor.order, SETTINGS.block_cap)
    cached = check_cache(descriptor, "blocks")
    if cached is not None:
        return cached
    if descriptor.kind == "Z":
        block = LocalBlock.integers(descriptor.order)
    elif descriptor.kind == "GF":
        modulus = find_irreducible(descriptor.p, descriptor.k)
        block = LocalBlock.polynomial(descriptor.p, modulus, name=descriptor.text)
    else:
        block = LocalBlock.polynomial(descriptor.base_order, descriptor.modulus)
    block.check_local()
    LOGGER.debug(f"realized {descriptor.text} (order {block.order})")
    return load_cache(descriptor, block, "blocks")

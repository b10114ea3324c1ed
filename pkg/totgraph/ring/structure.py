"""totgraph.ring.structure.py"""
import dataclasses
import functools
import logging
from typing import List

import numpy as np

from ..config import get_settings
from ..errors import ArithmeticConsistencyError, BlockNotLocalError, CapExceededError
from ..utils.numbers import prime_power
from . import FiniteRing
from .blocks import LocalBlock
from .descriptor import Factor, RingDescriptor, field_block

LOGGER = logging.getLogger(__name__)

SETTINGS = get_settings()


@dataclasses.dataclass(frozen=True, eq=False)
class RingComponent:
    """
    A local direct factor eR of a ring, cut out by a primitive idempotent e.

    `members` are the ring elements of eR in index order; `block` carries the induced
    arithmetic on positions into `members`.
    """

    idempotent: int
    members: tuple
    block: LocalBlock

    @property
    def order(self) -> int:
        return len(self.members)


def idempotent_decompose(ring: FiniteRing) -> List[RingComponent]:
    """
    Split a ring into local components by an exhaustive idempotent scan.

    Independent of the block presentation: only the ring's add and mul are used.

    :raises CapExceededError: above `decompose_cap`.
    :raises ArithmeticConsistencyError: if a component is not local.
    """
    if ring.order > SETTINGS.decompose_cap:
        raise CapExceededError("decomposition input", ring.order, SETTINGS.decompose_cap)
    everything = np.arange(ring.order)
    idempotents = everything[ring.mul(everything, everything) == everything]
    nonzero = [int(e) for e in idempotents if e != 0]
    primitive = []
    for e in nonzero:
        below = [f for f in nonzero if f != e and int(ring.mul(e, f)) == f]
        if not below:
            primitive.append(e)

    components = []
    for e in primitive:
        members = np.unique(ring.mul(e, everything))
        lookup = np.full(ring.order, -1, dtype=np.int64)
        lookup[members] = np.arange(members.size)
        add = lookup[ring.add(members[:, None], members[None, :])]
        mul = lookup[ring.mul(members[:, None], members[None, :])]
        block = LocalBlock(f"{e}R", add, mul, [ring.labels[m] for m in members])
        try:
            block.check_local()
        except BlockNotLocalError as exc:
            raise ArithmeticConsistencyError(f"component not local: {exc}") from exc
        components.append(RingComponent(e, tuple(int(m) for m in members), block))

    total = int(np.prod([component.order for component in components]))
    if total != ring.order:
        raise ArithmeticConsistencyError(
            f"component orders of {ring} multiply to {total}, not {ring.order}"
        )
    LOGGER.debug(f"{ring} decomposes into orders {[c.order for c in components]}")
    return components


@dataclasses.dataclass(frozen=True, eq=False)
class Quotient:
    """
    R/J(R) as a product of residue fields, with the projection and coset positions.

    `position[x]` is the rank of x inside its J(R)-coset under element order.
    """

    ring: FiniteRing
    source: FiniteRing
    proj: np.ndarray
    position: np.ndarray

    @property
    def coset_size(self) -> int:
        return len(self.source.jacobson)

    def coset_order(self, members=None) -> np.ndarray:
        """
        Elements of R (or of `members`) sorted by (proj(x), position(x)).

        Under this order the total graph of R equals the blow-up of the total graph of R/J(R).
        """
        members = np.arange(self.source.order) if members is None else np.asarray(members)
        keys = np.lexsort((self.position[members], self.proj[members]))
        return members[keys]

    def lift(self, element: int, position: int = 0) -> int:
        """The member of the coset over `element` with the given position."""
        matches = np.flatnonzero((self.proj == element) & (self.position == position))
        return int(matches[0])


def quotient_by_jacobson(ring: FiniteRing) -> Quotient:
    """
    R/J(R) presented as the product of the blocks' residue fields.

    Membership in Z is preserved: proj(x) in Z(S) iff x in Z(R).
    """
    return _quotient(ring)


@functools.lru_cache(maxsize=256)
def _quotient(ring: FiniteRing) -> Quotient:
    fields, class_maps = zip(*ring.residue_fields)
    descriptors = []
    for field in fields:
        p, k = prime_power(field.order)
        descriptors.append(field_block(p, k))
    descriptor = RingDescriptor(
        tuple(descriptors),
        f"{ring}/J",
        tuple(Factor(d.text, (d,)) for d in descriptors),
    )
    quotient = FiniteRing(descriptor, blocks=fields)

    digits = np.stack([class_maps[b][ring.digits[:, b]] for b in range(len(fields))], axis=1)
    proj = quotient.encode(digits)

    position = np.zeros(ring.order, dtype=np.int64)
    seen = np.zeros(quotient.order, dtype=np.int64)
    for x in range(ring.order):
        position[x] = seen[proj[x]]
        seen[proj[x]] += 1
    if not (seen == len(ring.jacobson)).all():
        raise ArithmeticConsistencyError(f"cosets of J({ring}) are not of equal size")
    proj.setflags(write=False)
    position.setflags(write=False)
    LOGGER.debug(f"{ring} / J has order {quotient.order}")
    return Quotient(quotient, ring, proj, position)

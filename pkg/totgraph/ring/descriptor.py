"""totgraph.ring.descriptor.py"""
import dataclasses
import functools
import logging
from typing import Dict, List, Tuple

import pyparsing as pp

from ..errors import RingSpecError
from ..utils.numbers import prime_power, prime_power_factors, residue_factors

LOGGER = logging.getLogger(__name__)

KIND_TAGS = {"Z": 0, "GF": 1, "Poly": 2}


def poly_text(coefficients: Tuple[int, ...], var: str = "x") -> str:
    """
    Render a coefficient tuple (high degree first) as a polynomial.

    >>> poly_text((1, 0, 1))
    'x^2+1'
    """
    degree = len(coefficients) - 1
    terms = []
    for position, coef in enumerate(coefficients):
        power = degree - position
        if coef == 0:
            continue
        if power == 0:
            terms.append(str(coef))
            continue
        monomial = var if power == 1 else f"{var}^{power}"
        terms.append(monomial if coef == 1 else f"{coef}{monomial}")
    return "+".join(terms) if terms else "0"


@dataclasses.dataclass(frozen=True)
class BlockDescriptor:
    """
    A finite local ring presentation.

    kind is "Z" (integers mod p^k), "GF" (field of order p^k) or "Poly" (Z_{p^k}[x]/(modulus)).
    `modulus` holds the monic modulus of a "Poly" block, high degree first, coefficients in
    0..p^k-1.
    """

    kind: str
    p: int
    k: int
    modulus: Tuple[int, ...] = ()

    @property
    def base_order(self) -> int:
        """Order of the coefficient ring."""
        return self.p ** self.k

    @property
    def degree(self) -> int:
        """Degree of the modulus (1 for Z blocks, k for GF blocks)."""
        if self.kind == "Poly":
            return len(self.modulus) - 1
        if self.kind == "GF":
            return self.k
        return 1

    @property
    def order(self) -> int:
        if self.kind == "Poly":
            return self.base_order ** self.degree
        return self.p ** self.k

    @property
    def residue_size(self) -> int:
        """Size of the residue field (smallest irreducible factor of the modulus for Poly)."""
        if self.kind == "Z":
            return self.p
        if self.kind == "GF":
            return self.p ** self.k
        degrees = [degree for degree, _ in residue_factors(self.modulus, self.p)]
        return self.p ** min(degrees)

    @property
    def text(self) -> str:
        if self.kind == "Z":
            return f"Z{self.order}"
        if self.kind == "GF":
            return f"GF({self.order})"
        return f"Z{self.base_order}[x]/({poly_text(self.modulus)})"

    def sort_key(self):
        """Canonical ordering key: residue size, order, kind tag, modulus coefficients."""
        return (self.residue_size, self.order, KIND_TAGS[self.kind], self.modulus)

    def __str__(self):
        return self.text


def integer_block(p: int, k: int) -> BlockDescriptor:
    """Z_{p^k}."""
    return BlockDescriptor("Z", p, k)


def field_block(p: int, k: int) -> BlockDescriptor:
    """GF(p^k), written Z p when k = 1."""
    if k == 1:
        return integer_block(p, 1)
    return BlockDescriptor("GF", p, k)


def poly_block(p: int, k: int, modulus: Tuple[int, ...]) -> BlockDescriptor:
    """Z_{p^k}[x]/(modulus)."""
    return BlockDescriptor("Poly", p, k, tuple(modulus))


@dataclasses.dataclass(frozen=True)
class Factor:
    """
    One `x`-separated factor of a spec as the user wrote it.

    A "Z n" factor with composite n carries several blocks; its elements are the residues
    0..n-1 (`modulus` = n). Every other factor is a single block (`modulus` = 0).
    """

    text: str
    blocks: Tuple[BlockDescriptor, ...]
    modulus: int = 0

    @property
    def order(self) -> int:
        return functools.reduce(lambda acc, block: acc * block.order, self.blocks, 1)


@dataclasses.dataclass(frozen=True)
class RingDescriptor:
    """
    Canonical presentation of a finite commutative ring as a product of local blocks.

    Equality and hashing use the canonical block list only.
    """

    blocks: Tuple[BlockDescriptor, ...]
    source_text: str = dataclasses.field(default="", compare=False)
    factors: Tuple[Factor, ...] = dataclasses.field(default=(), compare=False)

    @property
    def order(self) -> int:
        return functools.reduce(lambda acc, block: acc * block.order, self.blocks, 1)

    @property
    def text(self) -> str:
        """Canonical spec text; parses back to an equal descriptor."""
        return " x ".join(block.text for block in self.blocks)

    @property
    def residue_sizes(self) -> List[int]:
        return [block.residue_size for block in self.blocks]

    def __str__(self):
        return self.text

    @classmethod
    def from_blocks(cls, blocks) -> "RingDescriptor":
        """Canonical descriptor whose presentation is one factor per sorted block."""
        ordered = tuple(sorted(blocks, key=BlockDescriptor.sort_key))
        factors = tuple(Factor(block.text, (block,)) for block in ordered)
        return cls(ordered, " x ".join(block.text for block in ordered), factors)


# ################
# Grammar
# ################

_INT = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0])).set_name("integer")
_SIGN = pp.one_of("+ -").set_name("sign")
_VAR_TERM = (
    pp.Opt(_INT("coef"))
    + pp.Opt(pp.Suppress("*"))
    + pp.Suppress("x")
    + pp.Opt(pp.Suppress("^") + _INT("exp"))
).set_parse_action(lambda t: [(t.get("coef", 1), t.get("exp", 1))])
_CONST_TERM = _INT("coef").add_parse_action(lambda t: [(t[0], 0)])
_MONOMIAL = (_VAR_TERM | _CONST_TERM).set_name("term")
_POLY = pp.Group(
    pp.Group(pp.Opt(_SIGN, default="+") + _MONOMIAL) + pp.ZeroOrMore(pp.Group(_SIGN + _MONOMIAL))
).set_name("polynomial")

_POLY_BLOCK = pp.Group(
    pp.Suppress("Z")
    + _INT("n")
    + pp.Suppress(pp.Literal("[") + "x" + "]" + "/" + "(")
    + _POLY("poly")
    + pp.Suppress(")")
    + pp.Empty().set_parse_action(pp.replace_with("Poly"))("kind")
)
_GF_BLOCK = pp.Group(pp.Literal("GF")("kind") + pp.Suppress("(") + _INT("n") + pp.Suppress(")"))
_Z_BLOCK = pp.Group(pp.Literal("Z")("kind") + _INT("n"))
_BLOCK = (_POLY_BLOCK | _GF_BLOCK | _Z_BLOCK).set_name("block")
RING_GRAMMAR = pp.DelimitedList(_BLOCK, delim="x")


def _poly_coefficients(terms, base: int, text: str) -> Tuple[int, ...]:
    """Collect signed (coef, exp) terms into a coefficient tuple mod `base`, high degree first."""
    collected: Dict[int, int] = {}
    for sign, (coef, exp) in terms:
        collected[exp] = collected.get(exp, 0) + (coef if sign == "+" else -coef)
    degree = max((exp for exp, coef in collected.items() if coef % base), default=0)
    coefficients = tuple(collected.get(exp, 0) % base for exp in range(degree, -1, -1))
    if degree < 1:
        raise RingSpecError("polynomial modulus must have degree >= 1", text)
    if coefficients[0] != 1:
        raise RingSpecError(f"polynomial not monic: {poly_text(coefficients)}", text)
    return coefficients


def _factor_from_tokens(tokens, text: str) -> Factor:
    kind = tokens["kind"]
    n = tokens["n"]
    if n < 2:
        raise RingSpecError(f"block order must be at least 2, got {n}", text)
    if kind == "GF":
        split = prime_power(n)
        if split is None:
            raise RingSpecError(f"GF argument not a prime power: {n}", text)
        block = field_block(*split)
        return Factor(f"GF({n})", (block,))
    if kind == "Z":
        factors = prime_power_factors(n)
        blocks = tuple(
            sorted((integer_block(p, k) for p, k in factors), key=BlockDescriptor.sort_key)
        )
        if len(blocks) == 1:
            return Factor(f"Z{n}", blocks)
        return Factor(f"Z{n}", blocks, modulus=n)
    split = prime_power(n)
    if split is None:
        raise RingSpecError(f"polynomial quotient base must be a prime power: Z{n}", text)
    coefficients = _poly_coefficients(tokens["poly"], n, text)
    block = poly_block(split[0], split[1], coefficients)
    LOGGER.debug(f"parsed polynomial quotient block {block.text}")
    return Factor(block.text, (block,))


def parse_ring_spec(text: str) -> RingDescriptor:
    """
    Parse a ring spec such as ``Z4 x GF(9)`` or ``Z2[x]/(x^2)``.

    Composite moduli are split into prime-power blocks; the returned descriptor is canonical,
    while `factors` keeps the written presentation (it decides element order and labels).

    :returns: The canonical descriptor.
    :rtype: RingDescriptor
    :raises RingSpecError: on syntax errors or unacceptable blocks.
    """
    try:
        parsed = RING_GRAMMAR.parse_string(text, parse_all=True)
    except pp.ParseBaseException as exc:
        raise RingSpecError(f"syntax error: {exc.msg}", text, exc.loc, exc.msg) from exc
    factors = tuple(_factor_from_tokens(tokens, text) for tokens in parsed)
    blocks = tuple(
        sorted(
            (block for factor in factors for block in factor.blocks), key=BlockDescriptor.sort_key
        )
    )
    return RingDescriptor(blocks, text, factors)

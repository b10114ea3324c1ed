"""totgraph.utils.numbers.py"""
import functools
from typing import List, Optional, Sequence, Tuple

import sympy
from sympy.abc import x as X


def prime_power(n: int) -> Optional[Tuple[int, int]]:
    """
    Split `n` as p^k.

    :returns: (p, k) or None when `n` is not a prime power.
    :rtype: Optional[Tuple[int, int]]
    """
    if n < 2:
        return None
    factors = sympy.factorint(n)
    if len(factors) != 1:
        return None
    ((p, k),) = factors.items()
    return int(p), int(k)


def prime_power_factors(n: int) -> List[Tuple[int, int]]:
    """Prime-power factorization of `n` as (p, k) pairs by ascending p."""
    return [(int(p), int(k)) for p, k in sorted(sympy.factorint(n).items())]


def is_prime(n: int) -> bool:
    """Primality test."""
    return bool(sympy.isprime(n))


@functools.lru_cache(maxsize=None)
def residue_factors(coefficients: Sequence[int], p: int) -> Tuple[Tuple[int, int], ...]:
    """
    Distinct irreducible factors of a polynomial reduced mod p.

    `coefficients` are read high degree first.

    :returns: (degree, multiplicity) pairs of the monic irreducible factors.
    :rtype: Tuple[Tuple[int, int], ...]
    """
    poly = sympy.Poly([c % p for c in coefficients], X, modulus=p)
    _, factors = poly.factor_list()
    return tuple(sorted((int(factor.degree()), int(mult)) for factor, mult in factors))

"""Modular residue operators and the Chinese Remainder Theorem.

A rational c = num/den with den coprime to m is represented as the pair
(num, den); ``mo(num, den, m)`` is the least k >= 0 with k*den = num (mod m).
"""

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Tuple

import gmpy2

from ..core_utils.validator import ValidationError


def inverse(a: int, m: int) -> int:
    """Inverse of a modulo m as a plain int in [0, m)."""
    g = gcd(a, m)
    if g != 1:
        raise ValidationError(f"{a} is not invertible modulo {m}: gcd({a}, {m}) = {g}")
    return int(gmpy2.invert(a % m, m))


def mo(num: int, den: int, m: int) -> int:
    """The residue of num/den modulo m, in [0, m)."""
    if m < 2:
        raise ValidationError(f"Modulus must be at least 2, got {m}")
    return (num % m) * inverse(den, m) % m


def mo_plus(num: int, den: int, m: int) -> int:
    """Like ``mo`` but with 0 replaced by m, so the result lies in [1, m]."""
    residue = mo(num, den, m)
    return residue if residue else m


def crt(pairs: Iterable[Tuple[int, int]]) -> int:
    """Combine (residue, modulus) pairs with pairwise coprime moduli.

    Returns the unique k in [0, prod(moduli)).
    """
    result, modulus = 0, 1
    for residue, m in pairs:
        if m < 1:
            raise ValidationError(f"Modulus must be positive, got {m}")
        g = gcd(modulus, m)
        if g != 1:
            raise ValidationError(f"Moduli are not pairwise coprime: {m} shares factor {g}")
        # result + modulus*t = residue (mod m)
        t = (residue - result) * int(gmpy2.invert(modulus % m, m)) % m if m > 1 else 0
        result += modulus * t
        modulus *= m
    return result % modulus


def reciprocal_sum(primes: Sequence[int]) -> Fraction:
    """Exact sum of 1/p over the given primes."""
    return sum((Fraction(1, p) for p in primes), Fraction(0))


def maclaurin_condition(primes: Sequence[int]) -> bool:
    """Sufficient test sum(1/p_i) < 2n/(n-1) for deg P_N < N."""
    n = len(primes)
    return reciprocal_sum(primes) < Fraction(2 * n, n - 1)

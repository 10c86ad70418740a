"""Exact modular arithmetic, CRT, primality and prime tuples."""

from .primality import first_primes, is_probable_prime, next_prime_in_ap, prime_in_range
from .prime_tuple import PrimeTuple
from .residues import crt, inverse, maclaurin_condition, mo, mo_plus, reciprocal_sum

__all__ = [
    "PrimeTuple",
    "crt",
    "first_primes",
    "inverse",
    "is_probable_prime",
    "maclaurin_condition",
    "mo",
    "mo_plus",
    "next_prime_in_ap",
    "prime_in_range",
    "reciprocal_sum",
]

"""Coefficients of P_{pN} from coefficients of P_N.

Adding a prime p to N = p_0...p_{n-1} gives

    (1 - x^N) P_{pN}(x) = P_N(x^p) * prod_i (1 - x^{N_i}),

so a_{pN}(k) - a_{pN}(k - N) is a signed sum of a_N at the exponents
(k - N_T) / p, where N_T = sum_{i in T} N_i over subsets T.
"""

from typing import Callable, List, Optional, Tuple

from ..arithmetic.prime_tuple import PrimeTuple
from ..arithmetic.primality import is_probable_prime
from ..arithmetic.residues import mo
from ..core_utils.logger import Logger
from ..core_utils.validator import ValidationError
from ..engine.profile import subsets
from .providers import make_provider

logger = Logger(__name__)

Provider = Callable[[int], int]


def _check_lift(p: int, base: PrimeTuple):
    if not is_probable_prime(p):
        raise ValidationError(f"Lifting prime {p} is not prime")
    if base.N % p == 0:
        raise ValidationError(f"Lifting prime {p} divides N = {base.N}")


def _signed_cofactor_sums(base: PrimeTuple) -> List[Tuple[int, int]]:
    """(sign, N_T) for every subset T of the dimensions."""
    return [(-1 if len(T) % 2 else 1, sum(base.cofactor(i) for i in T))
            for T in subsets(list(range(base.n)))]


def delta_minus_n(p: int, base: PrimeTuple, k: int, provider: Optional[Provider] = None) -> int:
    """a_{pN}(k) - a_{pN}(k - N)."""
    _check_lift(p, base)
    provider = provider or make_provider("closed", base)
    total = 0
    for sign, NT in _signed_cofactor_sums(base):
        if (k - NT) % p == 0:
            total += sign * provider((k - NT) // p)
    return total


def coeff_via_general(p: int, base: PrimeTuple, k: int, provider: Optional[Provider] = None) -> int:
    """a_{pN}(k) - a_{pN}(k - pN), the telescoped sum of p consecutive differences.

    For each T exactly one of k - N_T - cN, 0 <= c < p, is divisible by p;
    it is k - N_T - N mo(k - N_T, N, p).
    """
    _check_lift(p, base)
    provider = provider or make_provider("closed", base)
    total = 0
    for sign, NT in _signed_cofactor_sums(base):
        m = k - NT
        total += sign * provider((m - base.N * mo(m, base.N, p)) // p)
    return total


def truncation_terms(p: int, base: PrimeTuple, k: int,
                     provider: Optional[Provider] = None) -> List[Tuple[int, int]]:
    """(m', signed a_N(m')) for every subset, ordered by m' = mo(k - N_T, p, N).

    The coefficients a_{pN}(k + cN) are the partial sums of this sequence.
    """
    _check_lift(p, base)
    provider = provider or make_provider("closed", base)
    terms = []
    for sign, NT in _signed_cofactor_sums(base):
        m = mo(k - NT, p, base.N)
        terms.append((m, sign * provider(m)))
    return sorted(terms, key=lambda term: term[0])


def coeff_via_truncation(p: int, base: PrimeTuple, k: int, provider: Optional[Provider] = None) -> int:
    """a_{pN}(k) directly, when sum 1/p_i < 1.

    The term of T is kept when p * mo(k - N_T, p, N) <= k; this integer test
    is the same as m' <= k/p.
    """
    _check_lift(p, base)
    if base.reciprocal_sum >= 1:
        raise ValidationError(
            f"Truncated lifting needs sum of 1/p_i < 1, but it is {base.reciprocal_sum} for {base}"
        )
    if k < 0:
        return 0
    provider = provider or make_provider("closed", base)
    total = 0
    for sign, NT in _signed_cofactor_sums(base):
        m = mo(k - NT, p, base.N)
        if p * m <= k:
            total += sign * provider(m)
    return total

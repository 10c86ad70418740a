"""Dense ground truth: expand P_N(x) by exact polynomial multiplication and division.

P_N(x) = (1 - x^N) * prod_{i<j} (1 - x^{N_ij}) / prod_i (1 - x^{N_i})
"""

from dataclasses import dataclass, field
from itertools import accumulate, combinations
from typing import Dict, List, Tuple

from ..arithmetic.prime_tuple import PrimeTuple
from ..arithmetic.residues import mo
from ..core_utils.config_manager import OracleConfig
from ..core_utils.logger import Logger
from ..core_utils.validator import BudgetExceededError, ConsistencyError, ValidationError, validator

logger = Logger(__name__)


@dataclass
class CoeffVector:
    """Dense coefficients of P_N (or of its reduction modulo 1 - x^N)."""

    coeffs: List[int]
    N: int
    reduced: bool = False
    primes: Tuple[int, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def at(self, k: int) -> int:
        """Coefficient of x^k, zero outside the stored range."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    @property
    def degree(self) -> int:
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k]:
                return k
        return -1

    def csv_rows(self) -> List[Tuple[int, int]]:
        return list(enumerate(self.coeffs))

    def to_json(self) -> List[str]:
        return [str(c) for c in self.coeffs]


def degree_pn(t: PrimeTuple) -> int:
    """deg P_N = N - sum N_i + sum_{i<j} N_ij."""
    pairs = sum(t.pair_cofactor(i, j) for i, j in combinations(range(t.n), 2))
    return t.N - sum(t.cofactors) + pairs


def working_length(t: PrimeTuple) -> int:
    """Terms held while expanding: deg P_N + sum N_i + 1, since the numerator is multiplied out first."""
    return t.N + sum(t.pair_cofactor(i, j) for i, j in combinations(range(t.n), 2)) + 1


def _multiply_binomial(a: List[int], e: int):
    """a <- a * (1 - x^e), truncated to len(a)."""
    if e < len(a):
        a[e:] = [x - y for x, y in zip(a[e:], a[:-e])]


def _divide_binomial(a: List[int], e: int):
    """a <- a / (1 - x^e) as a power series truncated to len(a)."""
    for r in range(min(e, len(a))):
        a[r::e] = list(accumulate(a[r::e]))


def expand_pn(t: PrimeTuple, reduced: bool = False,
              degree_cap: int = OracleConfig.degree_cap) -> CoeffVector:
    """Exact coefficients of P_N, or of P_N mod (1 - x^N) when ``reduced``."""
    degree = degree_pn(t)
    numerator = [t.N] + [t.pair_cofactor(i, j) for i, j in combinations(range(t.n), 2)]
    length = working_length(t)
    if length > degree_cap:
        raise BudgetExceededError(
            f"Expanding P_N for {t} needs {length} working coefficients (degree {degree}), cap is {degree_cap}",
            required=length,
            limit=degree_cap,
        )
    logger.debug("Expanding P_N", primes=t.primes, degree=degree, working_length=length)

    a = [0] * length
    a[0] = 1
    for e in numerator:
        _multiply_binomial(a, e)
    for e in t.cofactors:
        _divide_binomial(a, e)

    if any(a[degree + 1:]):
        raise ConsistencyError(f"Division of P_N for {t} left a nonzero remainder")

    coeffs = a[:degree + 1]
    if reduced:
        folded = [0] * t.N
        for k, c in enumerate(coeffs):
            folded[k % t.N] += c
        coeffs = folded

    return CoeffVector(coeffs=coeffs, N=t.N, reduced=reduced, primes=t.primes)


def height_dense(v: CoeffVector) -> Tuple[int, int]:
    """(max |coefficient|, smallest index attaining it)."""
    if not v.coeffs:
        raise ValidationError("Height of an empty coefficient vector is undefined")
    witness = max(range(len(v.coeffs)), key=lambda k: abs(v.coeffs[k]))
    return abs(v.coeffs[witness]), witness


def pq_coeff(p: int, q: int, k: int) -> int:
    """Coefficient of x^k in P_{pq} = Phi_{pq}, for 0 <= k < pq."""
    validator.validate_exponent(k, p * q)
    return int(mo(k, p, q) < mo(1, p, q)) - int(mo(k, q, p) >= mo(1, q, p))


def pq_coefficient_counts(p: int, q: int) -> Dict[int, int]:
    """Number of coefficients equal to 1 and to -1 in P_{pq}."""
    ones = mo(1, p, q) * mo(1, q, p)
    return {1: ones, -1: ones - 1}


def symmetry_sign(n: int) -> int:
    """x^deg P_N(1/x) = sign * P_N(x); every factor 1 - x^e contributes -1."""
    return -1 if (1 + n * (n - 1) // 2 - n) % 2 else 1


def has_symmetry(v: CoeffVector, n: int) -> bool:
    """Palindromic for two primes, antipalindromic for three (P_pqr = (1 - x) Phi_pqr)."""
    if v.reduced:
        raise ValidationError("Symmetry is a property of P_N itself, not of its reduction")
    sign = symmetry_sign(n)
    return all(c == sign * d for c, d in zip(v.coeffs, reversed(v.coeffs)))

"""Polynomial congruences for P_N checked by expanding both sides modulo x^N - 1.

Two decompositions are provided:

* ``OrientationIdentity`` writes P_N as a sum of n products of geometric
  sums, one per prime, with the direction of each pair of primes fixed by an
  orientation set S;
* ``SplittingIdentity`` writes P_N through the two smaller polynomials
  P_{N_i}(x^{p_i}) and P_{N_j}(x^{p_j}).
"""

from abc import ABC, abstractmethod
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from ..arithmetic.prime_tuple import PrimeTuple
from ..core_utils.config_manager import OracleConfig
from ..core_utils.logger import Logger
from ..core_utils.validator import ValidationError, validator
from .expansion import expand_pn

logger = Logger(__name__)

Sparse = Dict[int, int]


def geometric(step: int, start: int, stop: int, sign: int = 1) -> Sparse:
    """sign * sum_{start <= c < stop} x^{c*step}."""
    terms: Sparse = {}
    for c in range(start, stop):
        terms[c * step] = terms.get(c * step, 0) + sign
    return terms


def binomial(e: int) -> Sparse:
    """1 - x^e."""
    return {0: 1, e: -1} if e else {}


def monomial(e: int, c: int = 1) -> Sparse:
    return {e: c}


def multiply_sparse(dense: List[int], sparse: Sparse, N: int) -> List[int]:
    """dense * sparse modulo x^N - 1."""
    out = [0] * N
    for e, c in sparse.items():
        if not c:
            continue
        s = e % N
        rotated = dense[-s:] + dense[:-s] if s else dense
        out = [o + c * r for o, r in zip(out, rotated)]
    return out


def add(a: List[int], b: List[int]) -> List[int]:
    return [x + y for x, y in zip(a, b)]


class PolynomialIdentity(ABC):
    """A claimed congruence P_N(x) = rhs(x) modulo x^N - 1."""

    name = "identity"

    def __init__(self, t: PrimeTuple, degree_cap: int = OracleConfig.degree_cap):
        self.t = t
        self.degree_cap = degree_cap

    def unit_shift(self, i: int, j: int) -> int:
        """mo(p_i^{-1}, p_j); subclasses may override to build perturbed variants."""
        return self.t.unit_shift(i, j)

    def product(self, factors: List[Sparse]) -> List[int]:
        """Multiply sparse factors into a dense residue vector of length N."""
        acc = [0] * self.t.N
        acc[0] = 1
        for factor in factors:
            acc = multiply_sparse(acc, factor, self.t.N)
        return acc

    def lhs(self) -> List[int]:
        return expand_pn(self.t, reduced=True, degree_cap=self.degree_cap).coeffs

    @abstractmethod
    def rhs(self) -> List[int]:
        """Right-hand side reduced modulo x^N - 1."""

    def holds(self) -> bool:
        result = self.lhs() == self.rhs()
        logger.debug(f"{self.name} checked", primes=self.t.primes, holds=result)
        return result


class OrientationIdentity(PolynomialIdentity):
    """P_N as a sum over i of geometric-sum products oriented by S."""

    name = "orientation"

    def __init__(self, t: PrimeTuple, orientation, degree_cap: int = OracleConfig.degree_cap):
        super().__init__(t, degree_cap)
        if orientation.n != t.n:
            raise ValidationError(f"Orientation is for {orientation.n} primes, tuple has {t.n}")
        self.orientation = orientation

    def term(self, i: int) -> List[int]:
        t = self.t
        factors = [geometric(t.cofactor(i), 0, t[i])]
        for j in range(t.n):
            if j == i:
                continue
            u = self.unit_shift(i, j)
            if self.orientation.contains(i, j):
                factors.append(geometric(t.cofactor(j), 0, u))
            else:
                factors.append(geometric(t.cofactor(j), u, t[j], sign=-1))
        others = [j for j in range(t.n) if j != i]
        factors.extend(binomial(t.pair_cofactor(a, b)) for a, b in combinations(others, 2))
        return self.product(factors)

    def rhs(self) -> List[int]:
        total = [0] * self.t.N
        for i in range(self.t.n):
            total = add(total, self.term(i))
        return total


class SplittingIdentity(PolynomialIdentity):
    """P_N through P_{N_i}(x^{p_i}) and P_{N_j}(x^{p_j}); needs n >= 3."""

    name = "pair-split"

    def __init__(self, t: PrimeTuple, i: int, j: int, degree_cap: int = OracleConfig.degree_cap):
        super().__init__(t, degree_cap)
        if t.n < 3:
            raise ValidationError("The pair splitting needs at least three primes")
        validator.validate_dimension(i, t.n)
        validator.validate_dimension(j, t.n)
        if i == j:
            raise ValidationError("The pair splitting needs two distinct dimensions")
        self.i, self.j = i, j

    def substituted(self, d: int) -> Sparse:
        """P_{N_d}(x^{p_d}) as a sparse polynomial."""
        inner = expand_pn(self.t.without(d), degree_cap=self.degree_cap)
        p = self.t[d]
        return {k * p: c for k, c in enumerate(inner.coeffs) if c}

    def rhs(self) -> List[int]:
        t, i, j = self.t, self.i, self.j
        u_ji = self.unit_shift(j, i)
        u_ij = self.unit_shift(i, j)
        rest = [k for k in range(t.n) if k not in (i, j)]

        first = [geometric(t.cofactor(i), 0, u_ji), self.substituted(i)]
        first.extend(binomial(t.pair_cofactor(i, k)) for k in rest)

        second = [
            monomial(u_ji * t.cofactor(i)),
            geometric(t.cofactor(j), u_ij, t[j], sign=-1),
            self.substituted(j),
        ]
        second.extend(binomial(t.pair_cofactor(j, k)) for k in rest)

        return add(self.product(first), self.product(second))


def verify_identity(t: PrimeTuple, which: str, orientation=None,
                    pair: Optional[Tuple[int, int]] = None,
                    degree_cap: int = OracleConfig.degree_cap) -> bool:
    """Check ``"orientation"`` (with an OrientationSet) or ``"pair-split"`` (with a pair)."""
    if which == "orientation":
        if orientation is None:
            from ..engine.orientation import OrientationSet

            orientation = OrientationSet.descending(t.n)
        return OrientationIdentity(t, orientation, degree_cap).holds()
    if which == "pair-split":
        if pair is None:
            raise ValidationError("The pair-split identity needs a pair (i, j)")
        return SplittingIdentity(t, pair[0], pair[1], degree_cap).holds()
    raise ValidationError(f"Unknown identity '{which}'")

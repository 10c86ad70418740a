"""Known bounds on the largest height M(n) over n-prime tuples."""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Dict

from ..core_utils.validator import ValidationError


@dataclass(frozen=True)
class BoundsReport:
    n: int
    upper: Fraction
    lower: int
    maclaurin: Fraction

    def to_dict(self) -> Dict[str, str]:
        return {
            "n": str(self.n),
            "upper": str(self.upper),
            "lower": str(self.lower),
            "maclaurin": str(self.maclaurin),
        }


def pointwise_upper_bound(n: int) -> Fraction:
    """n 2^{C(n-2,2) - 1}; a fraction for n = 3."""
    return Fraction(n * 2 ** comb(n - 2, 2), 2)


def central_binomial_product(n: int) -> int:
    """prod_{i=1}^{n-2} C(i, floor(i/2)), reached by repeated amplification from two primes."""
    return prod(comb(i, i // 2) for i in range(1, n - 1))


def bounds_report(n: int) -> BoundsReport:
    if n < 2:
        raise ValidationError(f"Bounds need n >= 2, got {n}")
    return BoundsReport(
        n=n,
        upper=pointwise_upper_bound(n),
        lower=central_binomial_product(n),
        maclaurin=Fraction(2 * n, n - 1),
    )

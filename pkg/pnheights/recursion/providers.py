"""Pluggable sources of a_N(k) for the lifting formulas.

Every provider answers for any integer k: exponents below 0 or above
deg P_N have coefficient 0.
"""

from abc import ABC, abstractmethod
from typing import Dict, Optional

from ..arithmetic.prime_tuple import PrimeTuple
from ..core_utils.config_manager import OracleConfig, PNConfig
from ..core_utils.logger import Logger
from ..core_utils.validator import ValidationError
from ..engine.orientation import OrientationSet
from ..engine.profile import ResidueProfile
from ..engine.regions import RegionModel
from ..oracle.expansion import CoeffVector, degree_pn, expand_pn, pq_coeff

logger = Logger(__name__)


class CoefficientProvider(ABC):
    """Coefficients of one fixed P_N."""

    name = "abstract"

    def __init__(self, t: PrimeTuple):
        self.t = t
        self.degree = degree_pn(t)

    def __call__(self, k: int) -> int:
        if k < 0 or k > self.degree:
            return 0
        return self.coefficient(k)

    @abstractmethod
    def coefficient(self, k: int) -> int:
        """a_N(k) for 0 <= k <= deg P_N."""


class DenseProvider(CoefficientProvider):
    """Reads from a full expansion of P_N."""

    name = "oracle"

    def __init__(self, t: PrimeTuple, degree_cap: int = OracleConfig.degree_cap,
                 vector: Optional[CoeffVector] = None):
        super().__init__(t)
        self.vector = vector or expand_pn(t, degree_cap=degree_cap)

    def coefficient(self, k: int) -> int:
        return self.vector.at(k)


class ClosedFormProvider(CoefficientProvider):
    """Evaluates the closed form through a region model; needs deg P_N < N so
    that P_N equals its reduction.
    """

    name = "closed"

    def __init__(self, t: PrimeTuple, orientation: Optional[OrientationSet] = None,
                 profile: Optional[ResidueProfile] = None):
        super().__init__(t)
        self.profile = profile or ResidueProfile(t)
        if not self.profile.deg_lt_N:
            raise ValidationError(
                f"Closed-form coefficients of {t} describe P_N mod 1 - x^N only (deg P_N >= N)"
            )
        self.model = RegionModel(t, orientation, self.profile)

    def coefficient(self, k: int) -> int:
        return self.model.lookup(k)


class RecursiveProvider(CoefficientProvider):
    """Lifts the last prime off the tuple until two primes remain.

    With a base reciprocal sum below 1 the truncated formula gives a_N(k)
    directly; otherwise the telescoped difference a(k) - a(k - N) is summed
    down to negative exponents. Results are memoised on k mod N, which
    identifies the exponent whenever deg P_N < N.
    """

    name = "recursive"

    def __init__(self, t: PrimeTuple):
        super().__init__(t)
        self._memo: Dict[int, int] = {}
        if t.n > 2:
            self.p = t[-1]
            self.base = t.without(t.n - 1)
            self.inner = RecursiveProvider(self.base)
            self.truncated = self.base.reciprocal_sum < 1

    def _key(self, k: int) -> int:
        return k % self.t.N if self.degree < self.t.N else k

    def coefficient(self, k: int) -> int:
        key = self._key(k)
        if key in self._memo:
            return self._memo[key]
        if self.t.n == 2:
            value = pq_coeff(self.t[0], self.t[1], k)
        elif self.truncated:
            from .lifting import coeff_via_truncation
            value = coeff_via_truncation(self.p, self.base, k, self.inner)
        else:
            from .lifting import coeff_via_general
            value = sum(coeff_via_general(self.p, self.base, m, self.inner)
                        for m in range(k, -1, -self.t.N))
        self._memo[key] = value
        return value


PROVIDERS = {
    "oracle": DenseProvider,
    "closed": ClosedFormProvider,
    "recursive": RecursiveProvider,
}


def make_provider(kind: str, t: PrimeTuple, config: Optional[PNConfig] = None) -> CoefficientProvider:
    """Build the named provider, taking its limits from ``config``."""
    config = config or PNConfig()
    if kind not in PROVIDERS:
        raise ValidationError(f"Unknown coefficient provider '{kind}'; choose from {sorted(PROVIDERS)}")
    if kind == "oracle":
        return DenseProvider(t, degree_cap=config.oracle.degree_cap)
    if kind == "closed":
        return ClosedFormProvider(t, OrientationSet.named(config.engine.orientation, t.n))
    return RecursiveProvider(t)

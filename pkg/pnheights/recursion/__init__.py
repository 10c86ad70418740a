"""Prime-lifting recursions between P_N and P_{pN}."""

from .lifting import coeff_via_general, coeff_via_truncation, delta_minus_n, truncation_terms
from .providers import (
    ClosedFormProvider,
    CoefficientProvider,
    DenseProvider,
    RecursiveProvider,
    make_provider,
)

__all__ = [
    "ClosedFormProvider",
    "CoefficientProvider",
    "DenseProvider",
    "RecursiveProvider",
    "coeff_via_general",
    "coeff_via_truncation",
    "delta_minus_n",
    "make_provider",
    "truncation_terms",
]

"""Dense expansion of P_N and polynomial identity checks."""

from .expansion import (
    CoeffVector,
    degree_pn,
    expand_pn,
    has_symmetry,
    height_dense,
    pq_coeff,
    pq_coefficient_counts,
    symmetry_sign,
    working_length,
)
from .identities import OrientationIdentity, SplittingIdentity, verify_identity

__all__ = [
    "CoeffVector",
    "degree_pn",
    "expand_pn",
    "has_symmetry",
    "height_dense",
    "pq_coeff",
    "pq_coefficient_counts",
    "symmetry_sign",
    "working_length",
    "OrientationIdentity",
    "SplittingIdentity",
    "verify_identity",
]

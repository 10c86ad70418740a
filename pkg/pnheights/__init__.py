"""Exact coefficients, heights and extremal constructions for inclusion-exclusion polynomials."""

from .arithmetic import PrimeTuple
from .constructions import amplify, bounds_report, construct_height1, enlarge, verify_certificate
from .engine import RegionModel, coeff_at, region_scan_height
from .oracle import expand_pn, height_dense

__version__ = "0.1.0"

__all__ = [
    "PrimeTuple",
    "RegionModel",
    "amplify",
    "bounds_report",
    "coeff_at",
    "construct_height1",
    "enlarge",
    "expand_pn",
    "height_dense",
    "region_scan_height",
    "verify_certificate",
]

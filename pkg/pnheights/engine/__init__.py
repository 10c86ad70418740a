"""Pointwise closed form, residue regions and the three-prime tables."""

from .orientation import OrientationSet
from .pointwise import closed_form_value, coeff_at, zero_by_prop
from .profile import Region, ResidueProfile, boundary_labels, minimum_gap, residue_profile
from .regions import (
    RegionModel,
    ScanResult,
    coeff_region_lookup,
    projection_contributions,
    region_representative,
    region_scan_height,
)
from .rendering import region_csv, region_rows, region_svg
from .triples import Classification, balance_identity, classify_pqr, table_pqr

__all__ = [
    "OrientationSet",
    "closed_form_value",
    "coeff_at",
    "zero_by_prop",
    "Region",
    "ResidueProfile",
    "boundary_labels",
    "minimum_gap",
    "residue_profile",
    "RegionModel",
    "ScanResult",
    "coeff_region_lookup",
    "projection_contributions",
    "region_representative",
    "region_scan_height",
    "region_csv",
    "region_rows",
    "region_svg",
    "Classification",
    "balance_identity",
    "classify_pqr",
    "table_pqr",
]

"""Extremal tuple constructions and their certificates."""

from .amplify import AmplifyResult, amplify, amplify_chain, central_factor
from .bounds import BoundsReport, bounds_report
from .cache import CertificateCache, cache_key
from .certificate import CERTIFICATE_SCHEMA, Certificate, Condition, TraceStep
from .enlarge import EnlargeResult, enlarge, z_value
from .height_one import construct_height1, height_one_conditions
from .verification import VerificationReport, verify_certificate

__all__ = [
    "AmplifyResult",
    "BoundsReport",
    "CERTIFICATE_SCHEMA",
    "Certificate",
    "CertificateCache",
    "Condition",
    "EnlargeResult",
    "TraceStep",
    "VerificationReport",
    "amplify",
    "amplify_chain",
    "bounds_report",
    "cache_key",
    "central_factor",
    "construct_height1",
    "enlarge",
    "height_one_conditions",
    "verify_certificate",
    "z_value",
]

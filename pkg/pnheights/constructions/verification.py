"""Re-checking certificates from their primes alone."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..arithmetic.prime_tuple import PrimeTuple
from ..core_utils.config_manager import PNConfig
from ..core_utils.logger import Logger
from ..core_utils.validator import PNError
from .amplify import amplify_conditions, central_factor
from .certificate import Certificate, Condition
from .enlarge import enlarge_conditions, measured_height
from .height_one import height_one_conditions

logger = Logger(__name__)


@dataclass
class VerificationReport:
    conditions: List[Condition] = field(default_factory=list)
    problems: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems and all(c.holds for c in self.conditions)

    def to_dict(self) -> Dict:
        return {
            "ok": self.ok,
            "conditions": [c.to_dict() for c in self.conditions],
            "problems": list(self.problems),
        }


def _rederive(cert: Certificate, config: PNConfig, report: VerificationReport):
    if cert.kind == "height1":
        report.conditions = height_one_conditions(cert.primes)
        return

    if cert.source_primes is None or cert.scale is None:
        report.problems.append(f"{cert.kind} certificate lacks its source primes or scale")
        return

    if cert.kind == "enlarged":
        report.conditions = enlarge_conditions(cert.source_primes, cert.primes, cert.scale)
        return

    if cert.witness is None:
        report.problems.append("amplified certificate has no witness exponent")
        return
    conditions, M, value = amplify_conditions(cert.source_primes, cert.primes, cert.scale,
                                              cert.witness, config)
    report.conditions = conditions
    if cert.base_coefficient is not None and abs(cert.base_coefficient) != abs(M):
        report.problems.append(f"recorded base coefficient {cert.base_coefficient}, re-derived {M}")
    if cert.witness_value is not None and cert.witness_value != value:
        report.problems.append(f"recorded witness value {cert.witness_value}, re-derived {value}")
    if cert.factor is not None and cert.factor != central_factor(len(cert.source_primes)):
        report.problems.append(f"recorded factor {cert.factor} is not the central binomial coefficient")


def verify_certificate(cert: Certificate, config: Optional[PNConfig] = None) -> VerificationReport:
    """Recompute every condition and the measured height; nothing stored is trusted."""
    config = config or PNConfig()
    report = VerificationReport()
    try:
        PrimeTuple(cert.primes)
        _rederive(cert, config, report)

        recorded = {c.name: c.holds for c in cert.conditions}
        derived = {c.name: c.holds for c in report.conditions}
        for name in sorted(set(recorded) | set(derived)):
            if recorded.get(name) != derived.get(name):
                report.problems.append(f"condition {name}: recorded {recorded.get(name)}, re-derived {derived.get(name)}")

        if cert.height is not None:
            height, witness = measured_height(PrimeTuple(cert.primes), config)
            if height is not None and height != cert.height:
                report.problems.append(f"recorded height {cert.height}, region scan gives {height}")
            if cert.kind != "amplified" and witness is not None and witness != cert.witness:
                report.problems.append(f"recorded witness {cert.witness}, region scan gives {witness}")
    except PNError as e:
        report.problems.append(str(e))

    logger.info("Certificate verified", kind=cert.kind, primes=cert.primes, ok=report.ok,
                problems=len(report.problems))
    return report

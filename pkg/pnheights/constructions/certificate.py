"""Certificates: constructed prime tuples with the exact conditions they satisfy."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from ..core_utils.validator import ValidationError, validator

KINDS = ("height1", "enlarged", "amplified")

_DIGITS = {"type": "string", "pattern_digits": True}
_OPTIONAL_DIGITS = {"type": ["string", "null"], "pattern_digits": True}

CERTIFICATE_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["kind", "primes", "conditions", "trace", "budget", "seed"],
    "properties": {
        "kind": {"type": "string", "enum": list(KINDS)},
        "primes": {"type": "array", "items": _DIGITS},
        "conditions": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "holds", "instance"],
                "properties": {
                    "name": {"type": "string"},
                    "holds": {"type": "boolean"},
                    "instance": {"type": "string"},
                },
            },
        },
        "height": _OPTIONAL_DIGITS,
        "witness": _OPTIONAL_DIGITS,
        "trace": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["phase", "dimension", "old", "new", "modulus"],
                "properties": {
                    "phase": {"type": "string"},
                    "dimension": {"type": "integer"},
                    "old": _DIGITS,
                    "new": _DIGITS,
                    "modulus": _DIGITS,
                },
            },
        },
        "budget": _DIGITS,
        "seed": _DIGITS,
        "source_primes": {"type": ["array", "null"], "items": _DIGITS},
        "scale": {"type": ["string", "null"]},
        "base_coefficient": _OPTIONAL_DIGITS,
        "witness_value": _OPTIONAL_DIGITS,
        "factor": _OPTIONAL_DIGITS,
    },
}


@dataclass(frozen=True)
class Condition:
    """One named inequality, with the numbers it was checked on."""

    name: str
    holds: bool
    instance: str

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "holds": self.holds, "instance": self.instance}


@dataclass(frozen=True)
class TraceStep:
    """Replacement of one prime by the next suitable prime of an arithmetic progression."""

    phase: str
    dimension: int
    old: int
    new: int
    modulus: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "phase": self.phase,
            "dimension": self.dimension,
            "old": str(self.old),
            "new": str(self.new),
            "modulus": str(self.modulus),
        }


def _opt_str(value) -> Optional[str]:
    return None if value is None else str(value)


def _opt_int(value) -> Optional[int]:
    return None if value is None else int(value)


@dataclass
class Certificate:
    """A constructed tuple and everything needed to re-check it from its primes.

    ``witness`` is the exponent that certifies the height: the smallest
    maximal exponent of a region scan, or the constructed exponent of an
    amplification whose coefficient is ``witness_value``.
    """

    kind: str
    primes: Tuple[int, ...]
    conditions: List[Condition] = field(default_factory=list)
    height: Optional[int] = None
    witness: Optional[int] = None
    trace: List[TraceStep] = field(default_factory=list)
    budget: int = 0
    seed: int = 0
    source_primes: Optional[Tuple[int, ...]] = None
    scale: Optional[Fraction] = None
    base_coefficient: Optional[int] = None
    witness_value: Optional[int] = None
    factor: Optional[int] = None

    @property
    def n(self) -> int:
        return len(self.primes)

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.conditions)

    def failed(self) -> List[Condition]:
        return [c for c in self.conditions if not c.holds]

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready form; every integer is a decimal string."""
        return {
            "kind": self.kind,
            "primes": [str(p) for p in self.primes],
            "conditions": [c.to_dict() for c in self.conditions],
            "height": _opt_str(self.height),
            "witness": _opt_str(self.witness),
            "trace": [step.to_dict() for step in self.trace],
            "budget": str(self.budget),
            "seed": str(self.seed),
            "source_primes": None if self.source_primes is None else [str(p) for p in self.source_primes],
            "scale": _opt_str(self.scale),
            "base_coefficient": _opt_str(self.base_coefficient),
            "witness_value": _opt_str(self.witness_value),
            "factor": _opt_str(self.factor),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Certificate":
        validator.validate_against_schema(data, CERTIFICATE_SCHEMA)
        try:
            scale = None if data.get("scale") is None else Fraction(data["scale"])
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"Certificate scale {data['scale']!r} is not a fraction")
        return cls(
            kind=data["kind"],
            primes=tuple(int(p) for p in data["primes"]),
            conditions=[Condition(c["name"], c["holds"], c["instance"]) for c in data["conditions"]],
            height=_opt_int(data.get("height")),
            witness=_opt_int(data.get("witness")),
            trace=[
                TraceStep(s["phase"], s["dimension"], int(s["old"]), int(s["new"]), int(s["modulus"]))
                for s in data["trace"]
            ],
            budget=int(data["budget"]),
            seed=int(data["seed"]),
            source_primes=None if data.get("source_primes") is None
            else tuple(int(p) for p in data["source_primes"]),
            scale=scale,
            base_coefficient=_opt_int(data.get("base_coefficient")),
            witness_value=_opt_int(data.get("witness_value")),
            factor=_opt_int(data.get("factor")),
        )

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(validator.validate_json_structure(text, CERTIFICATE_SCHEMA))

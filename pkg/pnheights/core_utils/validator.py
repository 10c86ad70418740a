"""Error taxonomy and input validation for pnheights."""

import json
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, Optional, Sequence, Tuple, Union

from .logger import Logger


class PNError(Exception):
    """Base class for every error raised by pnheights."""


class ValidationError(PNError):
    """Invalid input: composite or repeated primes, out-of-range exponents, failed preconditions."""


class BudgetExceededError(PNError):
    """A configured resource budget would be exceeded."""

    def __init__(self, message: str, required: Optional[int] = None,
                 limit: Optional[int] = None, last_candidate: Optional[int] = None):
        super().__init__(message)
        self.required = required
        self.limit = limit
        self.last_candidate = last_candidate


class UnsupportedError(PNError):
    """The requested machinery does not cover this input (deg P_N >= N, or ties where labels matter)."""


class ConsistencyError(PNError):
    """An internal invariant failed. Seeing this means there is a bug."""


class ConstructionError(PNError):
    """An extremal construction could not be completed."""

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


logger = Logger(__name__)


class Validator:
    """Validation helpers; each ``validate_*`` raises ValidationError or returns True."""

    def validate_primes(self, primes: Sequence[int], is_prime: Callable[[int], bool],
                        minimum: int = 2) -> bool:
        """Validate an ordered list of distinct primes of the given minimum length."""
        if len(primes) < minimum:
            raise ValidationError(f"Need at least {minimum} primes, got {len(primes)}")

        seen = set()
        for p in primes:
            if isinstance(p, bool) or not isinstance(p, int):
                raise ValidationError(f"Prime must be an integer, got {p!r}")
            if p < 2:
                raise ValidationError(f"Prime must be at least 2, got {p}")
            if p in seen:
                raise ValidationError(f"Primes must be distinct, {p} is repeated")
            if not is_prime(p):
                raise ValidationError(f"{p} is composite")
            seen.add(p)

        return True

    def validate_exponent(self, k: int, upper: int, name: str = "k") -> bool:
        """Validate 0 <= k < upper."""
        if isinstance(k, bool) or not isinstance(k, int):
            raise ValidationError(f"{name} must be an integer, got {k!r}")
        if not 0 <= k < upper:
            raise ValidationError(f"{name}={k} is outside [0, {upper})")
        return True

    def validate_dimension(self, j: int, n: int) -> bool:
        if not 0 <= j < n:
            raise ValidationError(f"Dimension {j} is outside [0, {n})")
        return True

    def validate_subset(self, subset: Iterable[int], n: int, excluded: Optional[int] = None) -> bool:
        """Validate a subset of dimensions, optionally forbidding one index."""
        for i in subset:
            self.validate_dimension(i, n)
            if i == excluded:
                raise ValidationError(f"Subset may not contain dimension {excluded}")
        return True

    def validate_orientation(self, pairs: Iterable[Tuple[int, int]], n: int) -> bool:
        """Exactly one of (i, j), (j, i) for every i != j, and no (i, i)."""
        pairs = set(pairs)
        for i, j in pairs:
            self.validate_dimension(i, n)
            self.validate_dimension(j, n)
            if i == j:
                raise ValidationError(f"Orientation contains the diagonal pair ({i}, {i})")
        for i in range(n):
            for j in range(i + 1, n):
                count = ((i, j) in pairs) + ((j, i) in pairs)
                if count != 1:
                    raise ValidationError(
                        f"Orientation must contain exactly one of ({i}, {j}) and ({j}, {i})"
                    )
        return True

    def validate_file_path(self, file_path: Union[str, Path], must_exist: bool = False) -> bool:
        """Validate file path."""
        path = Path(file_path)

        if '..' in path.parts:
            raise ValidationError("Path traversal detected in file path")

        if must_exist and not path.exists():
            raise ValidationError(f"File does not exist: {path}")

        if not must_exist and not path.parent.exists():
            logger.debug(f"Parent directory does not exist yet: {path.parent}")

        return True

    def validate_json_structure(self, data: str, expected_schema: Optional[Dict] = None) -> Any:
        """Parse JSON text and check it against a small schema subset."""
        try:
            parsed = json.loads(data)
        except json.JSONDecodeError as e:
            raise ValidationError(f"Invalid JSON format: {e}")

        if expected_schema:
            self.validate_against_schema(parsed, expected_schema)

        return parsed

    def validate_against_schema(self, data: Any, schema: Dict, where: str = "$") -> bool:
        """Check ``type``, ``required``, ``properties``, ``items`` and ``enum`` keywords."""
        expected_type = schema.get('type')
        checks = {
            'object': lambda v: isinstance(v, dict),
            'array': lambda v: isinstance(v, list),
            'string': lambda v: isinstance(v, str),
            'integer': lambda v: isinstance(v, int) and not isinstance(v, bool),
            'boolean': lambda v: isinstance(v, bool),
            'null': lambda v: v is None,
        }
        if expected_type is not None:
            allowed = expected_type if isinstance(expected_type, list) else [expected_type]
            if not any(checks[t](data) for t in allowed):
                raise ValidationError(f"{where}: expected {expected_type}, got {type(data).__name__}")

        if 'enum' in schema and data not in schema['enum']:
            raise ValidationError(f"{where}: {data!r} is not one of {schema['enum']}")

        if 'pattern_digits' in schema and isinstance(data, str):
            body = data[1:] if data.startswith('-') else data
            if not body.isdigit():
                raise ValidationError(f"{where}: {data!r} is not a decimal integer string")

        if isinstance(data, dict):
            for field in schema.get('required', []):
                if field not in data:
                    raise ValidationError(f"{where}: missing required field '{field}'")
            for field, sub_schema in schema.get('properties', {}).items():
                if field in data:
                    self.validate_against_schema(data[field], sub_schema, f"{where}.{field}")

        if isinstance(data, list) and 'items' in schema:
            for index, item in enumerate(data):
                self.validate_against_schema(item, schema['items'], f"{where}[{index}]")

        return True


validator = Validator()

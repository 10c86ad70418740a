"""Configuration management for pnheights.

Values are resolved in the order defaults < config file < environment
(``PN_<SECTION>_<KEY>``) < explicit overrides (command-line flags).
"""

import dataclasses
import json
import os
import typing
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

import yaml

from .logger import Logger
from .validator import ValidationError

logger = Logger(__name__)

ENV_PREFIX = "PN_"


@dataclass
class ArithmeticConfig:
    """Primality testing."""
    primality_error_bits: int = 80
    witness_seed: int = 20240601


@dataclass
class OracleConfig:
    """Dense expansion."""
    degree_cap: int = 10_000_000


@dataclass
class EngineConfig:
    """Closed-form evaluation and region scans."""
    max_scan_regions: int = 2 ** 20
    threads: int = 1
    witness_scan_limit: int = 1_000_000
    orientation: str = "descending"


@dataclass
class RecursionConfig:
    provider: str = "closed"


@dataclass
class ConstructionConfig:
    """Extremal constructions."""
    ap_budget: int = 1_000_000
    probe_budget: int = 4096
    cache_dir: Optional[str] = None
    seed: int = 0


@dataclass
class SystemConfig:
    log_level: str = "WARNING"
    log_dir: Optional[str] = None


@dataclass
class PNConfig:
    """Top-level configuration."""
    arithmetic: ArithmeticConfig = field(default_factory=ArithmeticConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)
    engine: EngineConfig = field(default_factory=EngineConfig)
    recursion: RecursionConfig = field(default_factory=RecursionConfig)
    construction: ConstructionConfig = field(default_factory=ConstructionConfig)
    system: SystemConfig = field(default_factory=SystemConfig)


_CHOICES = {
    ("engine", "orientation"): ("descending", "ascending"),
    ("recursion", "provider"): ("closed", "oracle", "recursive"),
}


def _coerce(section: str, key: str, annotation: Any, value: Any) -> Any:
    """Convert a raw (often string) value to the field's declared type."""
    optional = typing.get_origin(annotation) is Union and type(None) in typing.get_args(annotation)
    base = next(a for a in typing.get_args(annotation) if a is not type(None)) if optional else annotation

    if optional and (value is None or (isinstance(value, str) and value.strip().lower() in ("", "none", "null"))):
        return None

    try:
        if base is int:
            if isinstance(value, bool):
                raise ValueError("booleans are not integers")
            coerced = int(value) if not isinstance(value, str) else int(value.strip(), 10)
        elif base is str:
            coerced = str(value).strip()
        else:
            coerced = value
    except (TypeError, ValueError) as e:
        raise ValidationError(f"Config {section}.{key}: cannot use {value!r} ({e})")

    choices = _CHOICES.get((section, key))
    if choices and coerced not in choices:
        raise ValidationError(f"Config {section}.{key} must be one of {choices}, got {coerced!r}")
    return coerced


class ConfigManager:
    """Loads, merges and saves ``PNConfig`` values."""

    def __init__(self, config_path: Optional[Union[str, Path]] = None,
                 environ: Optional[Mapping[str, str]] = None):
        self.config_path = Path(config_path) if config_path else None
        self.config = PNConfig()

        if self.config_path is not None:
            self.load_config(self.config_path)
        self.apply_environment(os.environ if environ is None else environ)

    def load_config(self, config_path: Union[str, Path]) -> PNConfig:
        """Load a YAML, JSON or ``section.key=value`` file on top of the current values."""
        self.config_path = Path(config_path)
        if not self.config_path.exists():
            raise ValidationError(f"Config file does not exist: {self.config_path}")

        text = self.config_path.read_text(encoding='utf-8')
        suffix = self.config_path.suffix.lower()
        if suffix == '.json':
            data = json.loads(text) if text.strip() else {}
        elif suffix in ('.yaml', '.yml'):
            data = yaml.safe_load(text) or {}
        else:
            data = self._parse_key_values(text)

        if not isinstance(data, dict):
            raise ValidationError(f"Config file {self.config_path} must hold a mapping")

        self.update_config(data)
        logger.info(f"Configuration loaded from {self.config_path}")
        return self.config

    @staticmethod
    def _parse_key_values(text: str) -> Dict[str, Dict[str, str]]:
        data: Dict[str, Dict[str, str]] = {}
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            if '=' not in line:
                raise ValidationError(f"Config line {number}: expected section.key=value")
            name, value = (part.strip() for part in line.split('=', 1))
            if '.' not in name:
                raise ValidationError(f"Config line {number}: key '{name}' needs a section")
            section, key = name.split('.', 1)
            data.setdefault(section, {})[key] = value
        return data

    def apply_environment(self, environ: Mapping[str, str]):
        """Apply ``PN_<SECTION>_<KEY>`` variables."""
        updates: Dict[str, Dict[str, str]] = {}
        for section in dataclasses.fields(self.config):
            for item in dataclasses.fields(getattr(self.config, section.name)):
                name = f"{ENV_PREFIX}{section.name.upper()}_{item.name.upper()}"
                if name in environ:
                    updates.setdefault(section.name, {})[item.name] = environ[name]
        if updates:
            self.update_config(updates)
            logger.debug("Environment overrides applied", overrides=updates)

    def update_config(self, updates: Mapping[str, Any]):
        """Merge a nested ``{section: {key: value}}`` mapping; None values are skipped."""
        for section_name, values in updates.items():
            if not hasattr(self.config, section_name):
                raise ValidationError(f"Unknown config section '{section_name}'")
            if not isinstance(values, Mapping):
                raise ValidationError(f"Config section '{section_name}' must be a mapping")

            section = getattr(self.config, section_name)
            hints = typing.get_type_hints(type(section))
            for key, value in values.items():
                if key not in hints:
                    raise ValidationError(f"Unknown config key '{section_name}.{key}'")
                setattr(section, key, _coerce(section_name, key, hints[key], value))

    def apply_overrides(self, overrides: Mapping[str, Any]):
        """Apply dotted ``section.key`` overrides, ignoring unset (None) ones."""
        nested: Dict[str, Dict[str, Any]] = {}
        for name, value in overrides.items():
            if value is None:
                continue
            section, key = name.split('.', 1)
            nested.setdefault(section, {})[key] = value
        self.update_config(nested)

    def to_dict(self) -> Dict[str, Any]:
        return dataclasses.asdict(self.config)

    def save_config(self, config_path: Union[str, Path]):
        """Write the current configuration as YAML or JSON (by suffix)."""
        path = Path(config_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        data = self.to_dict()
        with open(path, 'w', encoding='utf-8') as f:
            if path.suffix.lower() == '.json':
                json.dump(data, f, indent=2)
            else:
                yaml.safe_dump(data, f, default_flow_style=False, indent=2, sort_keys=False)
        logger.info(f"Configuration saved to {path}")

    def get_config(self) -> PNConfig:
        return self.config

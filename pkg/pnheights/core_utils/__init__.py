"""Shared logging, configuration, validation and file handling."""

from .config_manager import (
    ArithmeticConfig,
    ConfigManager,
    ConstructionConfig,
    EngineConfig,
    OracleConfig,
    PNConfig,
    RecursionConfig,
    SystemConfig,
)
from .file_handler import FileHandler
from .logger import Logger
from .validator import (
    BudgetExceededError,
    ConsistencyError,
    ConstructionError,
    PNError,
    UnsupportedError,
    ValidationError,
    Validator,
    validator,
)

__all__ = [
    "ArithmeticConfig",
    "BudgetExceededError",
    "ConfigManager",
    "ConsistencyError",
    "ConstructionConfig",
    "ConstructionError",
    "EngineConfig",
    "FileHandler",
    "Logger",
    "OracleConfig",
    "PNConfig",
    "PNError",
    "RecursionConfig",
    "SystemConfig",
    "UnsupportedError",
    "ValidationError",
    "Validator",
    "validator",
]

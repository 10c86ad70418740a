"""Logging for pnheights: console output plus optional detailed and structured files."""

import json
import logging
import sys
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

CONSOLE_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
FILE_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s"


def _plain(value: Any) -> Any:
    """Make a structured-log field JSON friendly; integers become decimal strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


def _brief(value: Any, limit: int = 24) -> str:
    text = str(value)
    if len(text) <= limit:
        return text
    if isinstance(value, int):
        return f"{text[:8]}...({len(text)} digits)"
    return text[:limit] + "..."


class Logger:
    """Logger with a context stack and JSON-lines structured output.

    Every instance registers itself so that ``Logger.configure`` can rewire
    the handlers of loggers created at import time.
    """

    _instances: List["Logger"] = []
    _level: int = logging.WARNING
    _log_dir: Optional[Path] = None

    def __init__(self, name: str = "pnheights", log_dir: Optional[str] = None):
        self.name = name
        self.log_dir = Path(log_dir) if log_dir else Logger._log_dir
        self.context_stack: List[Dict[str, Any]] = []

        self.logger = logging.getLogger(name)
        self.logger.setLevel(logging.DEBUG)
        self.logger.propagate = False
        self._setup_handlers()
        Logger._instances.append(self)

    @classmethod
    def configure(cls, level: str = "WARNING", log_dir: Optional[str] = None):
        """Set the console level and log directory for every logger."""
        cls._level = getattr(logging, str(level).upper(), logging.WARNING)
        cls._log_dir = Path(log_dir) if log_dir else None
        for instance in cls._instances:
            instance.log_dir = cls._log_dir
            instance._setup_handlers()

    def _setup_handlers(self):
        for handler in list(self.logger.handlers):
            handler.close()
        self.logger.handlers.clear()
        if getattr(self, "json_handler", None) is not None:
            self.json_handler.close()
        self.json_handler: Optional[logging.Handler] = None

        # stdout carries command results, so the console goes to stderr
        console = logging.StreamHandler(sys.stderr)
        console.setLevel(Logger._level)
        console.setFormatter(logging.Formatter(CONSOLE_FORMAT))
        self.logger.addHandler(console)

        if self.log_dir is None:
            return
        self.log_dir.mkdir(parents=True, exist_ok=True)
        detailed = logging.FileHandler(self.log_dir / f"{self.name}.log")
        detailed.setLevel(logging.DEBUG)
        detailed.setFormatter(logging.Formatter(FILE_FORMAT))
        self.logger.addHandler(detailed)

        # written to directly by _emit, never attached to self.logger
        self.json_handler = logging.FileHandler(self.log_dir / f"{self.name}_structured.jsonl")
        self.json_handler.setFormatter(logging.Formatter("%(message)s"))

    def push_context(self, context: Dict[str, Any]):
        self.context_stack.append(context)
        self.debug("Context pushed", **context)

    def pop_context(self) -> Optional[Dict[str, Any]]:
        if not self.context_stack:
            return None
        context = self.context_stack.pop()
        self.debug("Context popped", **context)
        return context

    def get_current_context(self) -> Dict[str, Any]:
        """Merge the context stack, innermost entries winning."""
        merged: Dict[str, Any] = {}
        for context in self.context_stack:
            merged.update(context)
        return merged

    def _emit(self, level: int, message: str, fields: Dict[str, Any]):
        # human lines get a short key=value tail; the JSON record gets everything
        if fields:
            tail = " ".join(f"{key}={_brief(value)}" for key, value in fields.items())
            self.logger.log(level, f"{message} [{tail}]", stacklevel=3)
        else:
            self.logger.log(level, message, stacklevel=3)

        if self.json_handler is None:
            return
        record = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": logging.getLevelName(level),
            "message": message,
            "context": _plain(self.get_current_context()),
            **_plain(fields),
        }
        self.json_handler.emit(logging.LogRecord(
            name=self.name, level=level, pathname="", lineno=0,
            msg=json.dumps(record), args=(), exc_info=None,
        ))

    def debug(self, message: str, **fields):
        self._emit(logging.DEBUG, message, fields)

    def info(self, message: str, **fields):
        self._emit(logging.INFO, message, fields)

    def warning(self, message: str, **fields):
        self._emit(logging.WARNING, message, fields)

    def error(self, message: str, **fields):
        self._emit(logging.ERROR, message, fields)

    def critical(self, message: str, **fields):
        self._emit(logging.CRITICAL, message, fields)

"""File handling for results, tables and certificates."""

import csv
import hashlib
import io
import json
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, Union

import yaml

from .logger import Logger
from .validator import ValidationError, validator

logger = Logger(__name__)


class FileHandler:
    """Reads and writes the artifacts pnheights produces.

    Writers return True on success and False after logging the failure;
    readers return None when the file cannot be read.
    """

    def __init__(self, base_dir: Optional[Union[str, Path]] = None):
        self.base_dir = Path(base_dir) if base_dir else None

    def resolve(self, file_path: Union[str, Path]) -> Path:
        path = Path(file_path)
        if self.base_dir is not None and not path.is_absolute():
            path = self.base_dir / path
        return path

    def ensure_directory(self, dir_path: Union[str, Path]) -> Path:
        path = self.resolve(dir_path)
        path.mkdir(parents=True, exist_ok=True)
        return path

    def _write(self, file_path: Union[str, Path], text: str, kind: str) -> bool:
        try:
            path = self.resolve(file_path)
            validator.validate_file_path(path)
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, 'w', encoding='utf-8', newline='') as f:
                f.write(text)
            logger.info(f"{kind} written to {path}")
            return True
        except (OSError, ValidationError) as e:
            logger.error(f"Failed to write {kind} to {file_path}: {e}")
            return False

    def _read(self, file_path: Union[str, Path], kind: str) -> Optional[str]:
        try:
            path = self.resolve(file_path)
            validator.validate_file_path(path, must_exist=True)
            with open(path, 'r', encoding='utf-8') as f:
                text = f.read()
            logger.debug(f"{kind} loaded from {path}")
            return text
        except (OSError, ValidationError) as e:
            logger.error(f"Failed to load {kind} from {file_path}: {e}")
            return None

    @staticmethod
    def json_text(data: Any) -> str:
        return json.dumps(data, indent=2, ensure_ascii=False) + "\n"

    def save_json(self, data: Any, file_path: Union[str, Path]) -> bool:
        return self._write(file_path, self.json_text(data), "JSON")

    def load_json(self, file_path: Union[str, Path]) -> Optional[Any]:
        text = self._read(file_path, "JSON")
        if text is None:
            return None
        try:
            return json.loads(text)
        except json.JSONDecodeError as e:
            logger.error(f"Invalid JSON in {file_path}: {e}")
            return None

    def save_yaml(self, data: Any, file_path: Union[str, Path]) -> bool:
        text = yaml.safe_dump(data, default_flow_style=False, sort_keys=False)
        return self._write(file_path, text, "YAML")

    def load_yaml(self, file_path: Union[str, Path]) -> Optional[Any]:
        text = self._read(file_path, "YAML")
        return None if text is None else yaml.safe_load(text)

    def save_text(self, text: str, file_path: Union[str, Path]) -> bool:
        return self._write(file_path, text, "Text")

    def load_text(self, file_path: Union[str, Path]) -> Optional[str]:
        return self._read(file_path, "Text")

    @staticmethod
    def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        """Render CSV with ``\\n`` line endings; integers are written in full."""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([str(value) for value in row])
        return buffer.getvalue()

    def save_csv(self, header: Sequence[str], rows: Iterable[Sequence[Any]],
                 file_path: Union[str, Path]) -> bool:
        return self._write(file_path, self.csv_text(header, rows), "CSV")

    def get_file_hash(self, file_path: Union[str, Path]) -> Optional[str]:
        """SHA-256 of a file's bytes."""
        try:
            with open(self.resolve(file_path), 'rb') as f:
                return hashlib.sha256(f.read()).hexdigest()
        except OSError as e:
            logger.error(f"Failed to hash {file_path}: {e}")
            return None

"""On-disk certificate cache, so expensive prime searches run once."""

import hashlib
from pathlib import Path
from typing import Optional, Sequence, Union

from ..core_utils.file_handler import FileHandler
from ..core_utils.logger import Logger
from ..core_utils.validator import ValidationError
from .certificate import Certificate

logger = Logger(__name__)


def cache_key(kind: str, n: int, budget: int, seed: int, source: Optional[Sequence[int]] = None) -> str:
    """``<kind>-n<n>-b<budget>-s<seed>``, plus a digest of the source primes when there is one."""
    key = f"{kind}-n{n}-b{budget}-s{seed}"
    if source is not None:
        digest = hashlib.sha256(",".join(str(p) for p in source).encode()).hexdigest()[:16]
        key = f"{key}-{digest}"
    return key


class CertificateCache:
    """Certificates stored as ``<key>.json`` in one directory."""

    def __init__(self, cache_dir: Union[str, Path]):
        self.files = FileHandler(cache_dir)
        self.files.ensure_directory(".")

    def path(self, key: str) -> Path:
        return self.files.resolve(f"{key}.json")

    def get(self, key: str) -> Optional[Certificate]:
        if not self.path(key).exists():
            return None
        data = self.files.load_json(self.path(key))
        if data is None:
            return None
        try:
            certificate = Certificate.from_dict(data)
        except ValidationError as e:
            logger.warning(f"Ignoring malformed cached certificate {key}: {e}")
            return None
        logger.debug("Certificate cache hit", key=key)
        return certificate

    def put(self, key: str, certificate: Certificate) -> bool:
        return self.files.save_json(certificate.to_dict(), self.path(key))

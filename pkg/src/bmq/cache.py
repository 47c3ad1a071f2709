"""Content-addressed result cache stored as flat JSON files."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from .diagram import parse_records

CACHE_ENV = "BMQ_CACHE_DIR"
FORMAT_VERSION = 1


def default_cache_dir() -> Path:
    if os.environ.get(CACHE_ENV):
        return Path(os.environ[CACHE_ENV])
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "bmq"


class ResultCache:
    def __init__(self, root):
        self.root = Path(root)

    @staticmethod
    def key(diagram_text: str, vector, semantics) -> str:
        """Hash of the diagram records (comments and spacing ignored),
        the data vector contents and the path semantics."""
        try:
            canonical = parse_records(diagram_text).to_text()
        except Exception:  # unparsable input is never cached under a shared key
            canonical = diagram_text
        payload = json.dumps([FORMAT_VERSION, canonical, vector.digest(), str(semantics)])
        return hashlib.sha256(payload.encode()).hexdigest()

    def _path(self, key: str) -> Path:
        return self.root / f"{key}.json"

    def get(self, key: str):
        try:
            return json.loads(self._path(key).read_text(encoding="utf-8"))
        except (OSError, ValueError):
            return None

    def put(self, key: str, value) -> None:
        """Write atomically: a temporary file in the cache directory is renamed into place."""
        self.root.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(value, fh, sort_keys=True)
            os.replace(tmp, self._path(key))
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise

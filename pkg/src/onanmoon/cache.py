"""On-disk cache for expensive exact computations.

The cache directory is taken from the ONAN_CACHE_DIR environment variable,
defaulting to ~/.cache/onanmoon.  Files are JSON and written atomically, so
an interrupted long run (congruence scans, trace tables) resumes where it
left off.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

__all__ = ["cache_dir", "JsonCache"]


def cache_dir() -> Path:
    root = os.environ.get("ONAN_CACHE_DIR")
    if root:
        p = Path(root)
    else:
        p = Path.home() / ".cache" / "onanmoon"
    p.mkdir(parents=True, exist_ok=True)
    return p


class JsonCache:
    """A dict-of-JSON-scalars persisted to one file, write-through."""

    def __init__(self, name: str, flush_every: int = 32):
        self.path = cache_dir() / name
        self.flush_every = flush_every
        self._dirty = 0
        if self.path.exists():
            try:
                self.data = json.loads(self.path.read_text())
            except (json.JSONDecodeError, OSError):
                self.data = {}
        else:
            self.data = {}

    def get(self, key: str):
        return self.data.get(key)

    def put(self, key: str, value) -> None:
        self.data[key] = value
        self._dirty += 1
        if self._dirty >= self.flush_every:
            self.flush()

    def flush(self) -> None:
        if not self._dirty:
            return
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(self.data, fh)
        os.replace(tmp, self.path)
        self._dirty = 0

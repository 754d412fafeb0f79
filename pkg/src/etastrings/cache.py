"""On-disk result cache for rendered outputs.

Entries are keyed by a content hash of (operation, arguments, precision
spec, package version), one JSON file per entry.  Writes go through a
temporary file and an atomic rename, so concurrent processes sharing a
cache directory never observe partial entries.  A hit returns the payload
byte-for-byte as stored, so enabling the cache cannot change any output.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time
from pathlib import Path

_VERSION = "etastrings-0.1.0"


def cache_key(operation: str, *parts: object) -> str:
    canon = json.dumps([_VERSION, operation, *[repr(p) for p in parts]],
                       separators=(",", ":"))
    return hashlib.sha256(canon.encode("utf-8")).hexdigest()


class ResultCache:
    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def get(self, key: str) -> str | None:
        path = self._path(key)
        try:
            entry = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, ValueError):
            return None
        if entry.get("key") != key:
            return None
        return entry.get("payload")

    def put(self, key: str, payload: str) -> None:
        entry = {"key": key, "created_at": time.time(), "payload": payload}
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                json.dump(entry, handle)
            os.replace(tmp, self._path(key))
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise

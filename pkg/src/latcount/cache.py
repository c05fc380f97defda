"""On-disk cache for exact integer term sequences.

One JSON file per key under a cache directory (``LATCOUNT_CACHE_DIR``
overrides the default ``~/.cache/latcount``).  Terms are stored as decimal
strings -- the counts outgrow doubles almost immediately -- together with
the full key and the tool version; a lookup returns a hit only when both
match, so terms computed by one method are never served for another and a
version bump invalidates everything.  Writes go through a temp file and an
atomic rename.
"""

from __future__ import annotations

import json
import os
import tempfile
import time
from hashlib import sha256
from pathlib import Path

ENV_VAR = "LATCOUNT_CACHE_DIR"
_TOOL_VERSION = "0.1.0"  # kept in sync with the package version


def default_cache_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path.home() / ".cache" / "latcount"


def _slug(text: str) -> str:
    return "".join(ch if ch.isalnum() else "-" for ch in text).strip("-").lower()


class SequenceCache:
    """Keyed store of big-integer sequences; a disabled cache is a no-op."""

    def __init__(self, directory: Path | str | None = None, enabled: bool = True):
        self.enabled = enabled
        self.directory = Path(directory) if directory is not None else default_cache_dir()

    def _path(self, key: dict) -> Path:
        canonical = json.dumps(key, sort_keys=True, separators=(",", ":"))
        digest = sha256(canonical.encode()).hexdigest()[:16]
        stem = _slug(f"{key.get('base', 'x')}-{key.get('method', 'x')}")
        return self.directory / f"{stem}-{digest}.json"

    def get(self, key: dict) -> list[int] | None:
        if not self.enabled:
            return None
        path = self._path(key)
        try:
            payload = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, ValueError):
            return None
        if payload.get("key") != key or payload.get("tool_version") != _TOOL_VERSION:
            return None
        try:
            return [int(term) for term in payload["terms"]]
        except (KeyError, ValueError):
            return None

    def put(self, key: dict, terms: list[int]) -> None:
        if not self.enabled:
            return
        payload = {
            "key": key,
            "terms": [str(term) for term in terms],
            "tool_version": _TOOL_VERSION,
            "created_at": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        }
        self.directory.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                json.dump(payload, handle, indent=1)
                handle.write("\n")
            os.replace(tmp, self._path(key))
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise

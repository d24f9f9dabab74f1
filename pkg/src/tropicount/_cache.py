"""Write-through cache for counting results.

Counts are keyed by ``"n:a:b:tangency:genus"``.  The in-process cache is a
plain dict; when the environment variable ``TROPICOUNT_CACHE`` names a file,
entries are also persisted there as a JSON object so repeated CLI invocations
can reuse earlier work.  File access is serialized with an ``fcntl`` lock, and
every write rewrites the whole map (the files stay tiny).

Only the integer value and the producing method are persisted.  Witness lists
are deliberately not cached: they depend on the drawn configuration, and the
point of the cache is the configuration-independent number.
"""

from __future__ import annotations

import fcntl
import json
import os
from typing import Dict, Optional, Tuple

_MEMORY: Dict[str, Tuple[int, str]] = {}
_HITS = 0
_MISSES = 0


def cache_key(
    surface_n: int,
    a: int,
    b: int,
    tangency,
    genus: int,
) -> str:
    """Canonical string key for a counting query.

    ``tangency`` may be None, a single weight, or a pair; pairs are sorted
    descending so (1,2) and (2,1) share an entry.
    """
    if tangency is None:
        tag = "0"
    elif isinstance(tangency, int):
        tag = str(tangency)
    else:
        hi, lo = max(tangency), min(tangency)
        tag = "%d,%d" % (hi, lo)
    return "%d:%d:%d:%s:%d" % (surface_n, a, b, tag, genus)


def _cache_path() -> Optional[str]:
    path = os.environ.get("TROPICOUNT_CACHE")
    return path if path else None


def _read_file(path: str) -> Dict[str, Tuple[int, str]]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            fcntl.flock(fh.fileno(), fcntl.LOCK_SH)
            try:
                raw = json.load(fh)
            finally:
                fcntl.flock(fh.fileno(), fcntl.LOCK_UN)
    except (OSError, ValueError):
        return {}
    out: Dict[str, Tuple[int, str]] = {}
    if isinstance(raw, dict):
        for key, entry in raw.items():
            if (
                isinstance(entry, dict)
                and isinstance(entry.get("value"), int)
                and isinstance(entry.get("method"), str)
            ):
                out[key] = (entry["value"], entry["method"])
    return out


def lookup(key: str) -> Optional[Tuple[int, str]]:
    """Return (value, method) for *key*, or None when absent."""
    global _HITS, _MISSES
    hit = _MEMORY.get(key)
    if hit is None:
        path = _cache_path()
        if path is not None:
            disk = _read_file(path)
            _MEMORY.update(disk)
            hit = disk.get(key)
    if hit is None:
        _MISSES += 1
    else:
        _HITS += 1
    return hit


def stats() -> Tuple[int, int]:
    """(hits, misses) counted since the last reset."""
    return _HITS, _MISSES


def reset_stats() -> None:
    global _HITS, _MISSES
    _HITS = 0
    _MISSES = 0


def store(key: str, value: int, method: str) -> None:
    """Record *key* -> (value, method), persisting when a file is configured."""
    _MEMORY[key] = (value, method)
    path = _cache_path()
    if path is None:
        return
    # Read-merge-rewrite under an exclusive lock so concurrent writers
    # cannot drop each other's entries.
    fd = os.open(path, os.O_RDWR | os.O_CREAT, 0o644)
    try:
        fcntl.flock(fd, fcntl.LOCK_EX)
        try:
            with os.fdopen(os.dup(fd), "r", encoding="utf-8") as fh:
                try:
                    raw = json.load(fh)
                except ValueError:
                    raw = {}
            if not isinstance(raw, dict):
                raw = {}
            raw[key] = {"value": value, "method": method}
            payload = json.dumps(raw, indent=0, sort_keys=True)
            os.lseek(fd, 0, os.SEEK_SET)
            os.ftruncate(fd, 0)
            os.write(fd, payload.encode("utf-8"))
        finally:
            fcntl.flock(fd, fcntl.LOCK_UN)
    finally:
        os.close(fd)


def clear_memory() -> None:
    """Drop the in-process cache (kept for tests)."""
    _MEMORY.clear()

"""Optional on-disk memo for plethysm results.

Entries are JSON files named by the sha256 of a canonical serialization of
the two inputs.  A loaded entry is trusted only if it echoes its inputs and
its degrees are consistent with degree multiplicativity; otherwise it is
discarded and recomputed.
"""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
import threading
from fractions import Fraction
from pathlib import Path

from repstab.partitions import Partition

ENV_VAR = "REPSTAB_CACHE_DIR"


def default_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "repstab"


def _ser(f) -> list:
    return [[list(lam), f"{c.numerator}/{c.denominator}"] for lam, c in f.key()]


def _deser(rows):
    from repstab.symfunc import SymFn

    return SymFn._raw({Partition(lam): Fraction(c) for lam, c in rows})


def _degrees_ok(f, g, result) -> bool:
    if not result:
        return True
    top = f.max_degree() * max(g.max_degree(), 0)
    if any(d > top for d in result.degrees()):
        return False
    if f.is_homogeneous() and g.is_homogeneous():
        return result.degrees() == [top]
    return True


class PlethysmCache:
    def __init__(self, directory=None):
        self.directory = Path(directory) if directory else default_dir()
        self._lock = threading.Lock()
        self.hits = 0
        self.rejected = 0

    def _path(self, f, g) -> Path:
        blob = json.dumps([_ser(f), _ser(g)], separators=(",", ":"))
        return self.directory / (hashlib.sha256(blob.encode()).hexdigest() + ".json")

    def get(self, f, g):
        path = self._path(f, g)
        try:
            data = json.loads(path.read_text())
        except (OSError, ValueError):
            return None
        try:
            ok = data["f"] == _ser(f) and data["g"] == _ser(g)
            result = _deser(data["result"]) if ok else None
        except (KeyError, TypeError, ValueError, ZeroDivisionError):
            ok, result = False, None
        if not ok or not _degrees_ok(f, g, result):
            self.rejected += 1
            with self._lock:
                path.unlink(missing_ok=True)
            return None
        self.hits += 1
        return result

    def put(self, f, g, result) -> None:
        path = self._path(f, g)
        payload = json.dumps({"f": _ser(f), "g": _ser(g), "result": _ser(result)})
        with self._lock:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                fh.write(payload)
            os.replace(tmp, path)

    def entries(self) -> list[Path]:
        if not self.directory.is_dir():
            return []
        return sorted(self.directory.glob("*.json"))

    def info(self) -> dict:
        files = self.entries()
        return {"directory": str(self.directory), "entries": len(files),
                "bytes": sum(p.stat().st_size for p in files)}

    def clear(self) -> int:
        files = self.entries()
        with self._lock:
            for p in files:
                p.unlink(missing_ok=True)
        return len(files)


def enable(directory=None) -> PlethysmCache:
    from repstab.symfunc import CONFIG

    CONFIG.cache = PlethysmCache(directory)
    return CONFIG.cache


def disable() -> None:
    from repstab.symfunc import CONFIG

    CONFIG.cache = None

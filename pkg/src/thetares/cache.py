"""On-disk cache for computed sequence entries.

Entries for large m are expensive (degrees grow quadratically with big
coefficients), so the CLI persists them one file per (family, m) under a
versioned header.  Files that fail any validation are recomputed, never
trusted; writes go through a temporary file and an atomic rename.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from .families import Family
from .ratfunc import RatFunc
from .recurrence import SeqState, rec_step

CACHE_FORMAT = 1


def family_digest(family: Family) -> str:
    return hashlib.sha256(family.canonical().encode()).hexdigest()[:16]


class SeqCache:
    def __init__(self, root):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def entry_path(self, family: Family, m: int) -> Path:
        return self.root / f"{family_digest(family)}-m{m}.json"

    def read(self, family: Family, m: int) -> RatFunc | None:
        path = self.entry_path(family, m)
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
            if data.get("format") != CACHE_FORMAT:
                return None
            if data.get("family") != family.canonical() or data.get("m") != m:
                return None
            return RatFunc.from_json_dict(data["entry"])
        except (OSError, ValueError, KeyError, TypeError):
            return None

    def write(self, family: Family, m: int, entry: RatFunc) -> None:
        from . import __version__

        data = {
            "format": CACHE_FORMAT,
            "engine": __version__,
            "family": family.canonical(),
            "m": m,
            "entry": entry.to_json_dict(),
        }
        text = json.dumps(data, sort_keys=True)
        fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(text)
            os.replace(tmp, self.entry_path(family, m))
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise

    def load_prefix(self, family: Family, m_max: int) -> list:
        """Longest consecutive run of valid entries 0, 1, ... up to m_max."""
        entries = []
        for m in range(m_max + 1):
            entry = self.read(family, m)
            if entry is None:
                break
            entries.append(entry)
        return entries


def cached_sequence(family: Family, m_max: int, cache: SeqCache | None = None) -> SeqState:
    """rec_sequence with optional persistence."""
    if cache is None:
        return SeqState(family).extend_to(m_max)
    entries = cache.load_prefix(family, m_max)
    while len(entries) <= m_max:
        m = len(entries)
        prev = entries[-1] if m else None
        entry = rec_step(family, m, prev)
        cache.write(family, m, entry)
        entries.append(entry)
    return SeqState(family, entries)

"""Append-only JSON-lines cache for Schubert structure constants.

File layout: a header line ``{"format": "dlchow-cache", "version": 1,
"n": n}`` followed by one record per product, ``{"u": ..., "v": ...,
"expansion": [[perm, coeff], ...]}`` with permutations in canonical word
form and coefficients as decimal strings.  Loading tolerates a corrupt
tail (records after the first bad line are ignored and the corruption is
remembered); :meth:`ProductCache.compact` rewrites the file cleanly and is
called on clean shutdown.

The cache is safe for concurrent lookup and insert within a process: a
lock serialises mutation and file appends, and readers only ever see fully
published entries.
"""

from __future__ import annotations

import json
import os
import threading
from pathlib import Path

from . import permgroup as pg
from .permgroup import Perm

__all__ = ["ProductCache", "cache_file_for"]

FORMAT = "dlchow-cache"
VERSION = 1


def cache_file_for(directory: Path | str, n: int) -> Path:
    return Path(directory) / f"schubert-products-n{n}.jsonl"


class ProductCache:
    """Disk-backed map from unordered label pairs to product expansions."""

    def __init__(self, path: Path | str, n: int):
        self.path = Path(path)
        self.n = n
        self.records: dict[tuple[Perm, Perm], dict[Perm, int]] = {}
        self.corruption_seen = False
        self._lock = threading.Lock()
        self._handle = None
        self._load()

    def _key(self, u: Perm, v: Perm) -> tuple[Perm, Perm]:
        return (u, v) if pg.sort_key(u) <= pg.sort_key(v) else (v, u)

    def _load(self) -> None:
        if not self.path.exists():
            return
        try:
            lines = self.path.read_text().splitlines()
        except OSError:
            self.corruption_seen = True
            return
        if not lines:
            return
        header = _parse_json(lines[0])
        if (
            header is None
            or header.get("format") != FORMAT
            or header.get("version") != VERSION
            or header.get("n") != self.n
        ):
            self.corruption_seen = True
            return
        for line in lines[1:]:
            if not line.strip():
                continue
            record = _parse_json(line)
            parsed = self._parse_record(record) if record is not None else None
            if parsed is None:
                # ignore the corrupt tail; compact() will drop it for good
                self.corruption_seen = True
                break
            key, expansion = parsed
            self.records[key] = expansion

    def _parse_record(self, record) -> tuple[tuple[Perm, Perm], dict[Perm, int]] | None:
        try:
            u = pg.parse_perm(record["u"], self.n)
            v = pg.parse_perm(record["v"], self.n)
            expansion = {
                pg.parse_perm(word, self.n): int(coeff)
                for word, coeff in record["expansion"]
            }
        except (KeyError, TypeError, ValueError):
            return None
        return self._key(u, v), expansion

    def get(self, key: tuple[Perm, Perm]) -> dict[Perm, int] | None:
        return self.records.get(self._key(*key))

    def put(self, key: tuple[Perm, Perm], expansion: dict[Perm, int]) -> None:
        key = self._key(*key)
        with self._lock:
            if key in self.records:
                return
            self.records[key] = expansion
            self._append(key, expansion)

    def _append(self, key: tuple[Perm, Perm], expansion: dict[Perm, int]) -> None:
        if self._handle is None:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            if self.corruption_seen and self.path.exists():
                # rewrite first, otherwise new records hide behind the bad tail
                self._rewrite()
                self._handle = open(self.path, "a", encoding="utf-8")
                return
            fresh = not self.path.exists() or self.path.stat().st_size == 0
            self._handle = open(self.path, "a", encoding="utf-8")
            if fresh:
                self._handle.write(self._header_line())
        self._handle.write(self._record_line(key, expansion))
        self._handle.flush()

    def _header_line(self) -> str:
        return json.dumps({"format": FORMAT, "version": VERSION, "n": self.n}) + "\n"

    def _record_line(self, key: tuple[Perm, Perm], expansion: dict[Perm, int]) -> str:
        u, v = key
        payload = {
            "u": pg.render_perm(u),
            "v": pg.render_perm(v),
            "expansion": [
                [pg.render_perm(w), str(c)]
                for w, c in sorted(expansion.items(), key=lambda kv: pg.sort_key(kv[0]))
            ],
        }
        return json.dumps(payload) + "\n"

    def compact(self) -> None:
        """Rewrite the file with a header and one line per known record."""
        with self._lock:
            self._rewrite()

    def _rewrite(self) -> None:
        if self._handle is not None:
            self._handle.close()
            self._handle = None
        self.path.parent.mkdir(parents=True, exist_ok=True)
        tmp = self.path.with_suffix(".tmp")
        with open(tmp, "w", encoding="utf-8") as out:
            out.write(self._header_line())
            for key in sorted(
                self.records, key=lambda k: (pg.sort_key(k[0]), pg.sort_key(k[1]))
            ):
                out.write(self._record_line(key, self.records[key]))
        os.replace(tmp, self.path)

    def close(self) -> None:
        with self._lock:
            if self._handle is not None:
                self._handle.close()
                self._handle = None


def _parse_json(line: str):
    try:
        out = json.loads(line)
    except json.JSONDecodeError:
        return None
    return out if isinstance(out, dict) else None

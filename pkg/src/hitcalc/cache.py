"""On-disk cache for admissible bases and small JSON results.

Basis files are plain text: a header line followed by one exponent tuple per
line in ascending monomial order. Other results are single flat JSON records.
Writes go to a temporary file in the same directory and are renamed into
place, so concurrent invocations never see a half-written entry.
"""

from __future__ import annotations

import json
import logging
import os
import shutil
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .monomial import compare, format_monomial, parse_monomial

log = logging.getLogger(__name__)

SCHEMA = "hitcalc/1"
BASIS_ORDER = "weight-then-exponent-leftlex"
KINDS = ("basis", "dims", "trace", "invariants")


class CorruptCacheError(ValueError):
    """A cache file does not have the expected shape."""


def default_dir() -> Path:
    return Path(os.environ.get("HITCALC_CACHE_DIR", ".hitcalc-cache"))


@dataclass(frozen=True)
class CacheKey:
    kind: str
    t: int
    n: int
    weight: tuple[int, ...] | None = None
    part: str | None = None
    extra: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown cache kind {self.kind!r}")
        if self.weight is not None:
            object.__setattr__(self, "weight", tuple(self.weight))

    def canonical(self) -> str:
        bits = [self.kind, f"t{self.t}", f"n{self.n}"]
        if self.weight is not None:
            bits.append("w" + ".".join(map(str, self.weight)))
        if self.part is not None:
            bits.append(self.part)
        if self.extra is not None:
            bits.append(self.extra)
        return "-".join(bits)

    def filename(self) -> str:
        return self.canonical() + (".txt" if self.kind == "basis" else ".json")


def basis_header(t: int, n: int) -> str:
    return f"hitcalc-basis v1 t={t} n={n} order={BASIS_ORDER}"


class Cache:
    def __init__(self, root: str | os.PathLike | None = None):
        self.root = Path(root) if root is not None else default_dir()
        self.hits = 0
        self.misses = 0

    def path(self, key: CacheKey) -> Path:
        return self.root / key.filename()

    def _write(self, path: Path, text: str):
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=path.suffix)
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    # bases

    def store_basis(self, t: int, n: int, monomials: Iterable[Sequence[int]]) -> Path:
        key = CacheKey("basis", t, n)
        lines = [basis_header(t, n)] + [format_monomial(m) for m in monomials]
        path = self.path(key)
        self._write(path, "\n".join(lines) + "\n")
        return path

    def load_basis(self, t: int, n: int) -> list[tuple[int, ...]] | None:
        path = self.path(CacheKey("basis", t, n))
        if not path.exists():
            self.misses += 1
            return None
        mons = read_basis_file(path, t, n)
        self.hits += 1
        return mons

    # records

    def store_record(self, key: CacheKey, record: dict) -> Path:
        if key.kind == "basis":
            raise ValueError("bases are stored with store_basis")
        body = {"schema": SCHEMA, "key": key.canonical(), **record}
        path = self.path(key)
        self._write(path, json.dumps(body, sort_keys=True) + "\n")
        return path

    def load_record(self, key: CacheKey) -> dict | None:
        path = self.path(key)
        if not path.exists():
            self.misses += 1
            return None
        try:
            rec = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise CorruptCacheError(f"{path}: {exc}") from None
        if not isinstance(rec, dict) or rec.get("schema") != SCHEMA or rec.get("key") != key.canonical():
            raise CorruptCacheError(f"{path}: schema or key mismatch")
        self.hits += 1
        return rec

    # maintenance

    def entries(self) -> list[dict]:
        if not self.root.exists():
            return []
        out = []
        for p in sorted(self.root.iterdir()):
            if p.name.startswith(".tmp-") or not p.is_file():
                continue
            out.append({"name": p.name, "bytes": p.stat().st_size})
        return out

    def clear(self) -> int:
        if not self.root.exists():
            return 0
        count = len(self.entries())
        shutil.rmtree(self.root)
        return count


def read_basis_file(path: str | os.PathLike, t: int, n: int) -> list[tuple[int, ...]]:
    """Parse and validate a basis file written by :meth:`Cache.store_basis`."""
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    if not lines or lines[0].strip() != basis_header(t, n):
        got = lines[0] if lines else "<empty>"
        raise CorruptCacheError(f"{path}: header {got!r} does not match t={t} n={n}")
    mons: list[tuple[int, ...]] = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            m = tuple(parse_monomial(line))
        except ValueError as exc:
            raise CorruptCacheError(f"{path}:{lineno}: {exc}") from None
        if len(m) != t or sum(m) != n:
            raise CorruptCacheError(f"{path}:{lineno}: {line!r} is not a degree {n} monomial in {t} variables")
        if mons and compare(mons[-1], m) >= 0:
            raise CorruptCacheError(f"{path}:{lineno}: monomials are not strictly ascending")
        mons.append(m)
    return mons


def cached_basis(t: int, n: int, cache: Cache | None) -> list[tuple[int, ...]]:
    """Admissible monomials for ``(t, n)``, from the cache when present."""
    from .hit import admissible_basis

    if cache is not None:
        mons = cache.load_basis(t, n)
        if mons is not None:
            log.info("cache hit: basis t=%d n=%d", t, n)
            return mons
    mons = list(admissible_basis(t, n).admissible)
    if cache is not None:
        cache.store_basis(t, n, mons)
    return mons

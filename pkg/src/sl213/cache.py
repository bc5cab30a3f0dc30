"""On-disk cache of expanded power sums, stored as "MPOLY v1" text files.

Entries are keyed by (family, m, n, normalization version).  Only raw
(un-normalized) power sums are stored, so the version tag is always "raw";
normalization is applied on load.  A corrupt entry is reported and skipped,
never returned.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from pathlib import Path

from .polyring import MPoly, deserialize, serialize

CACHE_ENV = "SL213_CACHE_DIR"
NORMALIZATION_VERSION = "raw"
_NAME = re.compile(r"^(?P<family>[a-z]+)_m(?P<m>\d+)_n(?P<n>\d+)_(?P<version>[a-z0-9]+)\.mpoly$")


class CacheError(OSError):
    pass


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "sl213"


@dataclass(frozen=True)
class CacheEntry:
    path: Path
    family: str
    m: int
    n: int
    version: str
    size: int


class PolyCache:
    def __init__(self, root: Path | str | None = None):
        self.root = Path(root) if root is not None else default_cache_dir()
        self.problems: list[str] = []

    def _path(self, family: str, m: int, n: int) -> Path:
        return self.root / f"{family}_m{m}_n{n}_{NORMALIZATION_VERSION}.mpoly"

    def _ensure(self):
        try:
            self.root.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise CacheError(f"cannot create cache directory {self.root}: {exc}") from exc

    def get_power_sum(self, m: int, n: int) -> MPoly | None:
        path = self._path("powersum", m, n)
        if not path.exists():
            return None
        try:
            p = deserialize(path.read_bytes())
        except (ValueError, UnicodeDecodeError) as exc:
            self.problems.append(f"{path.name}: {exc}")
            return None
        if not p.is_zero() and (not p.is_homogeneous() or p.degree() != 4 * m + 6 * n):
            self.problems.append(f"{path.name}: degree does not match 4m+6n = {4 * m + 6 * n}")
            return None
        return p

    def put_power_sum(self, m: int, n: int, p: MPoly) -> Path:
        self._ensure()
        path = self._path("powersum", m, n)
        tmp = path.with_suffix(".tmp")
        try:
            tmp.write_bytes(serialize(p))
            tmp.replace(path)
        except OSError as exc:
            raise CacheError(f"cannot write {path}: {exc}") from exc
        return path

    def entries(self) -> list[CacheEntry]:
        if not self.root.is_dir():
            return []
        out = []
        for path in sorted(self.root.iterdir()):
            match = _NAME.match(path.name)
            if match is None:
                continue
            out.append(CacheEntry(path, match["family"], int(match["m"]), int(match["n"]),
                                  match["version"], path.stat().st_size))
        return out

    def validate(self) -> list[str]:
        """Try to load every entry; returns the problems found."""
        self.problems = []
        for e in self.entries():
            if e.family == "powersum":
                self.get_power_sum(e.m, e.n)
        return list(self.problems)

    def clear(self) -> int:
        n = 0
        if not self.root.is_dir():
            return 0
        for path in self.root.iterdir():
            if _NAME.match(path.name) or path.suffix == ".tmp":
                path.unlink()
                n += 1
        return n


def budget_pairs(degree_budget: int) -> list[tuple[int, int]]:
    """All (m, n) != (0, 0) with 4m + 6n <= degree_budget, by degree then m."""
    pairs = [(m, n) for m in range(degree_budget // 4 + 1) for n in range(degree_budget // 6 + 1)
             if (m, n) != (0, 0) and 4 * m + 6 * n <= degree_budget]
    return sorted(pairs, key=lambda p: (4 * p[0] + 6 * p[1], p[0]))


def warm(cache: PolyCache, degree_budget: int, progress=None) -> list[tuple[int, int]]:
    """Expand and store every power sum within the degree budget."""
    from .invariants import power_sum_polynomial

    stored = []
    for m, n in budget_pairs(degree_budget):
        if cache.get_power_sum(m, n) is None:
            cache.put_power_sum(m, n, power_sum_polynomial(m, n))
        stored.append((m, n))
        if progress:
            progress(m, n)
    return stored

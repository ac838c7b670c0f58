"""Core data types and dominance primitives.

Everything downstream works on minimization problems: a point ``a`` dominates
``b`` when it is no worse in every objective and strictly better in at least
one. Duplicate points never dominate each other and are legal everywhere.
"""
from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

__all__ = [
    "PointSet",
    "Seed",
    "SelectionResult",
    "Deadline",
    "dominates",
    "nondominated_filter",
    "ideal_nadir",
    "reference_point",
]


class PointSet:
    """An immutable batch of objective vectors, shape ``(n, m)`` float64.

    Args:
        points: array-like of shape ``(n, m)``; ``m >= 2``; all values finite.
        label: optional human-readable tag carried through I/O.
    """

    __slots__ = ("points", "label")

    def __init__(self, points, label: str | None = None):
        arr = np.ascontiguousarray(points, dtype=np.float64)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-d array of points, got shape {arr.shape}")
        if arr.shape[0] == 0:
            raise ValueError("point set must be nonempty")
        if arr.shape[1] < 2:
            raise ValueError(f"need at least 2 objectives, got {arr.shape[1]}")
        if not np.isfinite(arr).all():
            raise ValueError("points must be finite (no NaN/inf)")
        arr.setflags(write=False)
        object.__setattr__(self, "points", arr)
        object.__setattr__(self, "label", label)

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("PointSet is immutable")

    @property
    def m(self) -> int:
        return self.points.shape[1]

    def __len__(self) -> int:
        return self.points.shape[0]

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self.points)

    def __getitem__(self, idx) -> np.ndarray:
        return self.points[idx]

    def take(self, indices) -> "PointSet":
        """Subset by candidate indices (duplicates allowed; order kept)."""
        return PointSet(self.points[np.asarray(indices, dtype=np.intp)], label=self.label)

    def __repr__(self) -> str:
        tag = f", label={self.label!r}" if self.label else ""
        return f"PointSet(n={len(self)}, m={self.m}{tag})"


_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class Seed:
    """A 64-bit seed with deterministic named sub-streams.

    Sub-stream derivation is pinned so runs are reproducible across platforms:
    ``child = blake2b(little_endian_64(value) || b"/" || name, digest_size=8)``
    interpreted as a little-endian unsigned integer.
    """

    value: int

    def __post_init__(self):
        if not 0 <= self.value <= _MASK64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")

    @classmethod
    def coerce(cls, seed: "Seed | int") -> "Seed":
        if isinstance(seed, Seed):
            return seed
        return cls(int(seed) & _MASK64)

    def spawn(self, name: str) -> "Seed":
        """Derive the named sub-stream seed."""
        h = hashlib.blake2b(
            self.value.to_bytes(8, "little") + b"/" + name.encode("utf-8"),
            digest_size=8,
        )
        return Seed(int.from_bytes(h.digest(), "little"))

    def rng(self) -> np.random.Generator:
        """Counter-based generator (Philox) keyed by this seed."""
        return np.random.Generator(np.random.Philox(self.value))


@dataclass
class SelectionResult:
    """Outcome of one selector run.

    ``indices`` index into the candidate set the selector was given; they form
    a set for every method except reference-vector selection, which may repeat
    an index. ``len(indices) == k`` unless ``timed_out`` is set.
    """

    indices: tuple[int, ...]
    method: str
    k: int
    runtime_seconds: float = 0.0
    timed_out: bool = False
    seed: int | None = None
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        self.indices = tuple(int(i) for i in self.indices)
        if any(i < 0 for i in self.indices):
            raise ValueError("selection indices must be non-negative")
        if not self.timed_out and len(self.indices) != self.k:
            raise ValueError(
                f"expected {self.k} indices, got {len(self.indices)} (and not timed out)"
            )


class Deadline:
    """Cooperative wall-clock budget checked between selector steps."""

    __slots__ = ("_expires",)

    def __init__(self, seconds: float | None):
        if seconds is not None and seconds < 0:
            raise ValueError("time limit must be >= 0")
        self._expires = None if seconds is None else time.monotonic() + seconds

    def expired(self) -> bool:
        return self._expires is not None and time.monotonic() >= self._expires


def _check(deadline: Deadline | None) -> bool:
    return deadline is not None and deadline.expired()


def dominates(a, b) -> bool:
    """True when ``a`` is <= ``b`` everywhere and < somewhere (minimization)."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError(f"objective vectors must share one shape, got {a.shape} vs {b.shape}")
    return bool((a <= b).all() and (a < b).any())


def nondominated_filter(points: PointSet) -> PointSet:
    """Keep exactly the points no other point dominates.

    Stable: survivors keep their input order. Exact duplicates never dominate
    one another, so all copies survive.
    """
    pts = points.points
    n = len(pts)
    if n == 0:
        return points
    # A dominating point precedes its victim in lexicographic order, so one
    # sorted pass checking only against survivors is sufficient.
    order = np.lexsort(pts.T[::-1])
    kept_rows: list[np.ndarray] = []
    kept_block: np.ndarray | None = None
    keep = np.zeros(n, dtype=bool)
    for idx in order:
        p = pts[idx]
        dominated = False
        if kept_block is not None and len(kept_block):
            le = (kept_block <= p).all(axis=1)
            if le.any():
                strict = (kept_block[le] < p).any(axis=1)
                dominated = bool(strict.any())
        if not dominated and kept_rows:
            block = np.asarray(kept_rows)
            le = (block <= p).all(axis=1)
            if le.any():
                dominated = bool((block[le] < p).any(axis=1).any())
        if not dominated:
            keep[idx] = True
            kept_rows.append(p)
            if len(kept_rows) >= 256:
                block = np.asarray(kept_rows)
                kept_block = block if kept_block is None else np.vstack([kept_block, block])
                kept_rows = []
    return PointSet(pts[keep], label=points.label)


def ideal_nadir(points: PointSet) -> tuple[np.ndarray, np.ndarray]:
    """Componentwise (min, max) over the set. Errors on an empty set."""
    if len(points) == 0:
        raise ValueError("ideal/nadir of an empty point set is undefined")
    return points.points.min(axis=0), points.points.max(axis=0)


def reference_point(nadir, factor: float = 1.2) -> np.ndarray:
    """Scaled reference point ``factor * nadir`` used for hypervolume."""
    if factor <= 0:
        raise ValueError(f"factor must be positive, got {factor}")
    nadir = np.asarray(nadir, dtype=np.float64)
    return factor * nadir

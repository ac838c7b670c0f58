"""Simplex-lattice reference vectors (Das-Dennis construction)."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

__all__ = [
    "ReferenceVectorSet",
    "das_dennis",
    "two_layer",
    "default_reference_vectors",
    "default_k",
]


@dataclass(frozen=True)
class ReferenceVectorSet:
    """Weight vectors on the unit simplex: nonnegative rows summing to 1, no repeats."""

    vectors: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(self.vectors, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] < 2:
            raise ValueError("need a non-empty (count, m) array with m >= 2")
        if (arr < 0).any():
            raise ValueError("reference vector components must be nonnegative")
        if np.abs(arr.sum(axis=1) - 1.0).max() > 1e-12:
            raise ValueError("reference vectors must sum to 1")
        if len(np.unique(arr, axis=0)) != len(arr):
            raise ValueError("duplicate reference vectors")
        arr.setflags(write=False)
        object.__setattr__(self, "vectors", arr)

    @property
    def m(self) -> int:
        return self.vectors.shape[1]

    def __len__(self) -> int:
        return self.vectors.shape[0]


def das_dennis(m: int, divisions: int) -> ReferenceVectorSet:
    """All simplex-lattice vectors with the given denominator.

    Yields C(divisions + m - 1, m - 1) vectors in a fixed lexicographic order.
    """
    if m < 2 or divisions < 1:
        raise ValueError("need m >= 2 and divisions >= 1")
    rows = []
    # stars-and-bars: divider positions encode the integer composition
    for dividers in combinations(range(divisions + m - 1), m - 1):
        prev = -1
        parts = []
        for d in dividers:
            parts.append(d - prev - 1)
            prev = d
        parts.append(divisions + m - 2 - prev)
        rows.append(parts)
    return ReferenceVectorSet(np.asarray(rows, dtype=np.float64) / divisions)


def two_layer(m: int, outer_divisions: int, inner_divisions: int) -> ReferenceVectorSet:
    """Outer lattice plus an inner lattice shrunk toward the simplex centre.

    Inner vectors map v -> v/2 + 1/(2m). Exact duplicates (possible at even
    division counts) are dropped, first occurrence kept.
    """
    outer = das_dennis(m, outer_divisions).vectors
    inner = das_dennis(m, inner_divisions).vectors / 2.0 + 1.0 / (2 * m)
    stacked = np.vstack([outer, inner])
    _, first = np.unique(stacked, axis=0, return_index=True)
    keep = np.sort(first)
    return ReferenceVectorSet(stacked[keep])


# Division counts giving the conventional vector budgets per objective count.
_DEFAULT_LATTICE: dict[int, tuple] = {
    3: ("single", 12),
    5: ("single", 6),
    8: ("two-layer", 3, 2),
    10: ("two-layer", 3, 2),
}


def default_reference_vectors(m: int) -> ReferenceVectorSet:
    """The standard lattice for m in {3, 5, 8, 10}: 91/210/156/275 vectors."""
    try:
        cfg = _DEFAULT_LATTICE[m]
    except KeyError:
        raise ValueError(f"no default lattice for m={m}; build one explicitly") from None
    if cfg[0] == "single":
        return das_dennis(m, cfg[1])
    return two_layer(m, cfg[1], cfg[2])


def default_k(m: int) -> int:
    """Default subset size per objective count (the lattice sizes above)."""
    return len(default_reference_vectors(m))


def vectors_for_k(m: int, k: int) -> ReferenceVectorSet:
    """A set of exactly k vectors: the standard lattice when its size matches,
    an exact single-layer lattice when one exists, and otherwise k evenly
    strided rows of the smallest lattice with at least k vectors."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if m in _DEFAULT_LATTICE:
        default = default_reference_vectors(m)
        if len(default) == k:
            return default
    count, divisions = m, 1
    while count < k:
        divisions += 1
        count = count * (divisions + m - 1) // divisions
    lattice = das_dennis(m, divisions)
    if count == k:
        return lattice
    rows = np.round(np.linspace(0, count - 1, k)).astype(int)
    return ReferenceVectorSet(lattice.vectors[rows])

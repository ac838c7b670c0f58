"""Lazy greedy engine and the marginal-gain oracles it drives.

The gains used here (hypervolume, its direction-sampled approximation, and
coverage-style indicator decreases) all diminish as the committed subset
grows, so a stale heap entry only ever overestimates. The loop keeps pure
heap discipline: a popped entry computed at an older step is refreshed and
pushed back, never trusted. That makes the selection bit-identical to the
naive re-evaluate-everything greedy, including tie handling, because the heap
orders by (gain, candidate index) exactly like an argmax that prefers the
smallest index.
"""
from __future__ import annotations

import heapq
import time

import numpy as np
from scipy.spatial.distance import cdist

from .core import Deadline, PointSet, SelectionResult
from .hypervolume import (
    DirectionVectorSet,
    exclusive_hv,
    ray_lengths_blocked,
    ray_lengths_to_reference,
)

__all__ = [
    "HypervolumeGain",
    "ApproxHypervolumeGain",
    "CoverageGain",
    "lazy_greedy",
]

_GAIN_CHUNK = 8192


class HypervolumeGain:
    """Exact marginal hypervolume w.r.t. the committed subset."""

    name = "hypervolume"

    def __init__(self, points: np.ndarray, ref_point: np.ndarray):
        self.points = np.asarray(points, dtype=np.float64)
        self.ref = np.asarray(ref_point, dtype=np.float64)
        self._inside = (self.points < self.ref).all(axis=1)
        self._committed: list[int] = []

    def initial_gains(self) -> np.ndarray:
        return np.where(self._inside, np.prod(self.ref - self.points, axis=1), 0.0)

    def gain(self, i: int) -> float:
        if not self._inside[i]:
            return 0.0
        others = self.points[self._committed] if self._committed else np.empty((0, len(self.ref)))
        return exclusive_hv(self.points[i], others, self.ref)

    def add(self, i: int) -> None:
        self._committed.append(i)


class ApproxHypervolumeGain:
    """Direction-sampled marginal hypervolume w.r.t. the committed subset."""

    name = "hypervolume-approx"

    def __init__(self, points: np.ndarray, ref_point: np.ndarray, directions: DirectionVectorSet):
        self.points = np.asarray(points, dtype=np.float64)
        self.ref = np.asarray(ref_point, dtype=np.float64)
        self.dirs = directions.vectors
        self._m = self.points.shape[1]
        self._inside = (self.points < self.ref).all(axis=1)
        self._committed: list[int] = []

    def _value(self, lengths: np.ndarray) -> np.ndarray:
        return np.mean(np.clip(lengths, 0.0, None) ** self._m, axis=-1)

    def initial_gains(self) -> np.ndarray:
        n = len(self.points)
        out = np.zeros(n)
        for lo in range(0, n, _GAIN_CHUNK):
            hi = min(lo + _GAIN_CHUNK, n)
            lengths = ray_lengths_to_reference(self.points[lo:hi], self.ref, self.dirs)
            out[lo:hi] = self._value(lengths)
        return np.where(self._inside, out, 0.0)

    def gain(self, i: int) -> float:
        if not self._inside[i]:
            return 0.0
        p = self.points[i]
        lengths = ray_lengths_to_reference(p[None, :], self.ref, self.dirs)[0]
        if self._committed:
            blocked = ray_lengths_blocked(p, self.points[self._committed], self.dirs)
            lengths = np.minimum(lengths, blocked)
        return float(self._value(lengths))

    def add(self, i: int) -> None:
        self._committed.append(i)


class CoverageGain:
    """Mean decrease of a nearest-distance coverage indicator over a reference set.

    ``mode`` picks the per-pair distance: "euclidean" for plain inverted
    generational distance, "dominance-gap" for the one-sided variant that only
    counts coordinates where the candidate is worse than the reference point.
    The empty-subset baseline is a constant ceiling above every pairwise
    distance, which keeps gains diminishing from the very first pick.
    """

    def __init__(self, points: np.ndarray, reference: np.ndarray, mode: str = "euclidean"):
        if mode not in ("euclidean", "dominance-gap"):
            raise ValueError(f"unknown coverage mode: {mode}")
        self.points = np.asarray(points, dtype=np.float64)
        self.reference = np.asarray(reference, dtype=np.float64)
        self.mode = mode
        self.name = "coverage-" + mode
        lo = np.minimum(self.points.min(axis=0), self.reference.min(axis=0))
        hi = np.maximum(self.points.max(axis=0), self.reference.max(axis=0))
        # strictly above any achievable pairwise distance
        self.ceiling = float(np.linalg.norm(hi - lo)) + 1.0
        self._best = np.full(len(self.reference), self.ceiling)

    def _dists(self, rows: np.ndarray) -> np.ndarray:
        if self.mode == "euclidean":
            return cdist(rows, self.reference)
        diff = rows[:, None, :] - self.reference[None, :, :]
        np.clip(diff, 0.0, None, out=diff)
        return np.sqrt((diff * diff).sum(axis=2))

    def initial_gains(self) -> np.ndarray:
        n = len(self.points)
        chunk = max(1, int(30_000_000 // max(1, len(self.reference))))
        out = np.empty(n)
        for lo in range(0, n, chunk):
            d = self._dists(self.points[lo : lo + chunk])
            out[lo : lo + chunk] = np.maximum(self._best[None, :] - d, 0.0).mean(axis=1)
        return out

    def gain(self, i: int) -> float:
        d = self._dists(self.points[i : i + 1])[0]
        return float(np.maximum(self._best - d, 0.0).mean())

    def add(self, i: int) -> None:
        d = self._dists(self.points[i : i + 1])[0]
        np.minimum(self._best, d, out=self._best)


def lazy_greedy(
    candidates: PointSet,
    k: int,
    oracle,
    deadline: Deadline | None = None,
) -> SelectionResult:
    """Greedy subset selection with lazy gain re-evaluation.

    Ties always fall to the smallest candidate index. The deadline, if any,
    is polled every heap pop; on expiry the partial selection is returned
    with ``timed_out`` set.
    """
    n = len(candidates)
    if not 0 < k <= n:
        raise ValueError(f"k must be in [1, {n}], got {k}")
    start = time.perf_counter()
    gains = np.asarray(oracle.initial_gains(), dtype=np.float64)
    if gains.shape != (n,):
        raise ValueError("oracle.initial_gains() must return one gain per candidate")
    heap = [(-g, i, 0) for i, g in enumerate(gains.tolist())]
    heapq.heapify(heap)
    selected: list[int] = []
    timed_out = False
    while len(selected) < k:
        if deadline is not None and deadline.expired():
            timed_out = True
            break
        neg_gain, i, stamp = heapq.heappop(heap)
        if stamp == len(selected):
            selected.append(i)
            oracle.add(i)
        else:
            heapq.heappush(heap, (-float(oracle.gain(i)), i, len(selected)))
    return SelectionResult(
        indices=tuple(selected),
        method=f"lazy-greedy/{oracle.name}",
        k=k,
        runtime_seconds=time.perf_counter() - start,
        timed_out=timed_out,
    )

"""Exact and approximated hypervolume (minimization).

``hv_exact`` measures the region dominated by a point set up to a reference
point, via the WFG exclusive-volume recursion: points are sorted by the first
objective descending, each point adds its box volume minus the hypervolume of
its limit set (the other points clipped up to it), and dominated points are
pruned from every limit set. Points that do not strictly dominate the
reference point contribute nothing.

``hv_contribution_approx`` replaces the exact exclusive volume with a
direction-sampled estimate: along each nonnegative direction the ray from the
point is cut where it first leaves the point's exclusive region, and the
clipped lengths are averaged as length**m. Only comparisons between
candidates are meaningful; the method-wide constant in front of the average
is fixed at one.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import PointSet, Seed

__all__ = [
    "DirectionVectorSet",
    "generate_directions",
    "hv_exact",
    "hv_contribution",
    "hv_contribution_approx",
]


@dataclass(frozen=True)
class DirectionVectorSet:
    """Unit-norm nonnegative direction vectors, shape ``(count, m)``."""

    vectors: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(self.vectors, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] == 0:
            raise ValueError("directions must form a non-empty 2-d array")
        if (arr < 0).any():
            raise ValueError("direction components must be nonnegative")
        norms = np.linalg.norm(arr, axis=1)
        if (norms == 0).any():
            raise ValueError("zero direction vector")
        if np.abs(norms - 1.0).max() > 1e-12:
            raise ValueError("direction vectors must have unit Euclidean norm")
        arr.setflags(write=False)
        object.__setattr__(self, "vectors", arr)

    @property
    def m(self) -> int:
        return self.vectors.shape[1]

    def __len__(self) -> int:
        return self.vectors.shape[0]


def generate_directions(m: int, count: int, seed: Seed | int) -> DirectionVectorSet:
    """Directions uniform on the nonnegative unit sphere (|Gaussian| rows, normalized)."""
    if m < 2 or count < 1:
        raise ValueError("need m >= 2 and count >= 1")
    rng = Seed.coerce(seed).rng()
    vecs = np.abs(rng.standard_normal((count, m)))
    norms = np.linalg.norm(vecs, axis=1)
    while (norms == 0).any():  # measure-zero guard
        bad = norms == 0
        vecs[bad] = np.abs(rng.standard_normal((int(bad.sum()), m)))
        norms = np.linalg.norm(vecs, axis=1)
    return DirectionVectorSet(vecs / norms[:, None])


def _as_points(points) -> np.ndarray:
    arr = points.points if isinstance(points, PointSet) else np.asarray(points, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError("expected an (n, m) array of points")
    return arr


def _prune_pairwise(pts: np.ndarray) -> np.ndarray:
    """Drop rows weakly dominated by another row; of exact duplicates keep the first."""
    n = len(pts)
    if n <= 1:
        return pts
    le = (pts[:, None, :] <= pts[None, :, :]).all(axis=2)
    eq = (pts[:, None, :] == pts[None, :, :]).all(axis=2)
    strictly = (le & ~eq).any(axis=0)
    dup = (eq & np.triu(np.ones((n, n), dtype=bool), 1)).any(axis=0)
    return pts[~(strictly | dup)]


def _hv2d(pts: np.ndarray, ref: np.ndarray) -> float:
    # pts pruned: first coordinate strictly ascending, second strictly descending
    p = pts[np.argsort(pts[:, 0], kind="stable")]
    upper = np.concatenate(([ref[1]], p[:-1, 1]))
    return float(((ref[0] - p[:, 0]) * (upper - p[:, 1])).sum())


def _wfg(pts: np.ndarray, ref: np.ndarray) -> float:
    n = len(pts)
    if n == 0:
        return 0.0
    if n == 1:
        return float(np.prod(ref - pts[0]))
    if pts.shape[1] == 2:
        return _hv2d(pts, ref)
    pts = pts[np.argsort(-pts[:, 0], kind="stable")]
    total = 0.0
    for i in range(n):
        box = float(np.prod(ref - pts[i]))
        rest = pts[i + 1 :]
        if len(rest):
            limit = _prune_pairwise(np.maximum(rest, pts[i]))
            total += box - _wfg(limit, ref)
        else:
            total += box
    return total


def _clip_and_prune(pts: np.ndarray, ref: np.ndarray) -> np.ndarray:
    pts = pts[(pts < ref).all(axis=1)]
    if len(pts) > 1:
        # exact hv is invariant to order and duplicates, so sort-dedupe first
        pts = np.unique(pts, axis=0)
        if len(pts) > 4000:  # pairwise prune is quadratic in memory
            from .core import PointSet as _PS, nondominated_filter

            pts = nondominated_filter(_PS(pts)).points
        else:
            pts = _prune_pairwise(pts)
    return pts


def hv_exact(points, ref_point) -> float:
    """Hypervolume of ``points`` relative to ``ref_point``; 0.0 for an empty set."""
    pts = _as_points(points)
    ref = np.asarray(ref_point, dtype=np.float64)
    if pts.shape[0] and pts.shape[1] != ref.shape[0]:
        raise ValueError("reference point dimension mismatch")
    pts = _clip_and_prune(pts, ref)
    return _wfg(pts, ref)


def exclusive_hv(point: np.ndarray, others: np.ndarray, ref: np.ndarray) -> float:
    """Volume dominated by ``point`` alone, relative to ``others`` and ``ref``."""
    point = np.asarray(point, dtype=np.float64)
    if not (point < ref).all():
        return 0.0
    others = others[(others < ref).all(axis=1)] if len(others) else others
    box = float(np.prod(ref - point))
    if len(others) == 0:
        return box
    limit = _prune_pairwise(np.maximum(others, point))
    return box - _wfg(limit, ref)


def hv_contribution(index: int, points, ref_point) -> float:
    """Exact marginal hypervolume of one point within its set.

    Equals hv_exact(S) - hv_exact(S without the point) but runs a single
    exclusive-volume recursion on the limit set instead of two full passes.
    A point duplicated elsewhere in the set contributes 0.
    """
    pts = _as_points(points)
    ref = np.asarray(ref_point, dtype=np.float64)
    n = len(pts)
    if not 0 <= index < n:
        raise IndexError(f"index {index} out of range for {n} points")
    others = np.delete(pts, index, axis=0)
    val = exclusive_hv(pts[index], others, ref)
    return max(val, 0.0)


def ray_lengths_to_reference(cands: np.ndarray, ref: np.ndarray, dirs: np.ndarray) -> np.ndarray:
    """Per (candidate, direction): parameter where the ray exits the reference box."""
    diff = ref[None, :] - cands  # (c, m)
    with np.errstate(divide="ignore", invalid="ignore"):
        q = diff[:, None, :] / dirs[None, :, :]
    if (dirs == 0).any():
        zero = np.broadcast_to((dirs == 0)[None, :, :], q.shape)
        pos = np.broadcast_to(diff[:, None, :] > 0, q.shape)
        q = np.where(zero, np.where(pos, np.inf, -np.inf), q)
    return q.min(axis=2)


def ray_lengths_blocked(cand: np.ndarray, blockers: np.ndarray, dirs: np.ndarray) -> np.ndarray:
    """Per direction: parameter where the ray from ``cand`` enters some blocker's box."""
    diff = blockers - cand[None, :]  # (t, m)
    with np.errstate(divide="ignore", invalid="ignore"):
        q = diff[:, None, :] / dirs[None, :, :]
    if (dirs == 0).any():
        zero = np.broadcast_to((dirs == 0)[None, :, :], q.shape)
        pos = np.broadcast_to(diff[:, None, :] > 0, q.shape)
        q = np.where(zero, np.where(pos, np.inf, -np.inf), q)
    return q.max(axis=2).min(axis=0)


def approx_exclusive_hv(
    point: np.ndarray, others: np.ndarray, ref: np.ndarray, directions: DirectionVectorSet
) -> float:
    """Direction-sampled stand-in for ``exclusive_hv`` (comparison scale)."""
    point = np.asarray(point, dtype=np.float64)
    if not (point < ref).all():
        return 0.0
    dirs = directions.vectors
    lengths = ray_lengths_to_reference(point[None, :], ref, dirs)[0]
    if len(others):
        lengths = np.minimum(lengths, ray_lengths_blocked(point, others, dirs))
    m = len(point)
    return float(np.mean(np.clip(lengths, 0.0, None) ** m))


def hv_contribution_approx(index: int, points, ref_point, directions: DirectionVectorSet) -> float:
    """Approximated marginal hypervolume of one point within its set.

    Zero whenever the point is weakly dominated inside the set (a blocker cuts
    every ray at or before the origin) or does not strictly dominate the
    reference point.
    """
    pts = _as_points(points)
    ref = np.asarray(ref_point, dtype=np.float64)
    n = len(pts)
    if not 0 <= index < n:
        raise IndexError(f"index {index} out of range for {n} points")
    others = np.delete(pts, index, axis=0)
    return approx_exclusive_hv(pts[index], others, ref, directions)

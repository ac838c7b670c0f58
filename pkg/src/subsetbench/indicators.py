"""Distance-based quality indicators for selected subsets.

All are exact, vectorized reductions; chunking keeps memory bounded so a
million-point reference set is fine. ``igd``-style values are reported with
the usual sign (smaller is better); the selectors that maximize them negate
internally.
"""
from __future__ import annotations

import numpy as np
from scipy.spatial import cKDTree
from scipy.spatial.distance import cdist, pdist

from .core import PointSet

__all__ = ["igd", "igd_plus", "eps_plus", "uniformity"]

_CHUNK = 1 << 16
# above this many reference points a k-d tree beats the dense pass
_TREE_THRESHOLD = 200_000


def _arrays(subset, reference) -> tuple[np.ndarray, np.ndarray]:
    s = subset.points if isinstance(subset, PointSet) else np.asarray(subset, dtype=np.float64)
    r = reference.points if isinstance(reference, PointSet) else np.asarray(reference, dtype=np.float64)
    if s.ndim != 2 or r.ndim != 2 or s.shape[1] != r.shape[1]:
        raise ValueError("subset and reference set must be (n, m) with matching m")
    if len(s) == 0 or len(r) == 0:
        raise ValueError("empty subset or reference set")
    return s, r


def igd(subset, reference) -> float:
    """Mean Euclidean distance from each reference point to its nearest subset point."""
    s, r = _arrays(subset, reference)
    if len(r) >= _TREE_THRESHOLD and len(s) > 1:
        d, _ = cKDTree(s).query(r, k=1)
        return float(np.mean(d))
    total = 0.0
    for lo in range(0, len(r), _CHUNK):
        block = r[lo : lo + _CHUNK]
        total += cdist(block, s).min(axis=1).sum()
    return float(total / len(r))


def _block_rows(s: np.ndarray) -> int:
    # keep the (rows, |S|, m) scratch tensor near ~3e7 elements
    return max(1, int(30_000_000 // max(1, s.shape[0] * s.shape[1])))


def igd_plus(subset, reference) -> float:
    """IGD with the dominance-aware one-sided distance.

    Per pair only the coordinates where the subset point is worse than the
    reference point count: d = ||max(0, s - ref)||.
    """
    s, r = _arrays(subset, reference)
    step = _block_rows(s)
    total = 0.0
    for lo in range(0, len(r), step):
        block = r[lo : lo + step]
        diff = s[None, :, :] - block[:, None, :]
        np.clip(diff, 0.0, None, out=diff)
        d = np.sqrt((diff * diff).sum(axis=2))
        total += d.min(axis=1).sum()
    return float(total / len(r))


def eps_plus(subset, reference) -> float:
    """Additive epsilon: worst reference point's best additive cover gap."""
    s, r = _arrays(subset, reference)
    step = _block_rows(s)
    worst = -np.inf
    for lo in range(0, len(r), step):
        block = r[lo : lo + step]
        gaps = (s[None, :, :] - block[:, None, :]).max(axis=2)  # (b, |S|)
        worst = max(worst, float(gaps.min(axis=1).max()))
    return worst


def uniformity(subset) -> float:
    """Minimum pairwise Euclidean distance; 0.0 when any point repeats."""
    s = subset.points if isinstance(subset, PointSet) else np.asarray(subset, dtype=np.float64)
    if s.ndim != 2:
        raise ValueError("expected an (n, m) array")
    if len(s) < 2:
        raise ValueError("uniformity needs at least 2 points")
    if len(s) <= 4096:
        return float(pdist(s).min())
    d, _ = cKDTree(s).query(s, k=2)
    return float(d[:, 1].min())

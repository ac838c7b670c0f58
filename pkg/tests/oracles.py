"""Independent reference implementations used only by the tests.

Everything here is deliberately naive: plain loops, itertools enumeration,
and Monte-Carlo estimates. The point is to agree with the library through a
completely different code path, so nothing below imports from the package
except the gain-oracle classes exercised by naive_greedy (which re-drives
them step by step instead of through the lazy heap).
"""
from __future__ import annotations

import itertools
import math

import numpy as np


def dominates_loop(a, b) -> bool:
    not_worse = all(x <= y for x, y in zip(a, b))
    strictly = any(x < y for x, y in zip(a, b))
    return not_worse and strictly


def nondominated_loop(points: np.ndarray) -> list[int]:
    keep = []
    for i, p in enumerate(points):
        if not any(j != i and dominates_loop(points[j], p) for j in range(len(points))):
            keep.append(i)
    return keep


def igd_loop(subset: np.ndarray, reference: np.ndarray) -> float:
    total = 0.0
    for r in reference:
        total += min(math.dist(s, r) for s in subset)
    return total / len(reference)


def igd_plus_loop(subset: np.ndarray, reference: np.ndarray) -> float:
    total = 0.0
    for r in reference:
        best = math.inf
        for s in subset:
            d = math.sqrt(sum(max(0.0, si - ri) ** 2 for si, ri in zip(s, r)))
            best = min(best, d)
        total += best
    return total / len(reference)


def eps_plus_loop(subset: np.ndarray, reference: np.ndarray) -> float:
    worst = -math.inf
    for r in reference:
        best = math.inf
        for s in subset:
            best = min(best, max(si - ri for si, ri in zip(s, r)))
        worst = max(worst, best)
    return worst


def uniformity_loop(subset: np.ndarray) -> float:
    best = math.inf
    for i in range(len(subset)):
        for j in range(i + 1, len(subset)):
            best = min(best, math.dist(subset[i], subset[j]))
    return best


def hv_monte_carlo(points: np.ndarray, ref: np.ndarray, samples: int, seed: int):
    """Uniform sampling of the ideal-to-ref box; returns (estimate, standard error)."""
    points = np.asarray(points, dtype=np.float64)
    ref = np.asarray(ref, dtype=np.float64)
    lo = points.min(axis=0)
    box = float(np.prod(ref - lo))
    rng = np.random.default_rng(seed)
    hits = 0
    chunk = 1_000_000
    done = 0
    while done < samples:
        take = min(chunk, samples - done)
        u = rng.uniform(lo, ref, size=(take, len(ref)))
        covered = np.zeros(take, dtype=bool)
        for p in points:
            covered |= (u >= p).all(axis=1)
        hits += int(covered.sum())
        done += take
    frac = hits / samples
    est = box * frac
    se = box * math.sqrt(max(frac * (1.0 - frac), 1e-12) / samples)
    return est, se


def hv_2d_sweep(points: np.ndarray, ref) -> float:
    """Exact 2-d hypervolume by sorting on the first objective."""
    pts = [tuple(p) for p in np.asarray(points, dtype=np.float64) if all(p < np.asarray(ref))]
    if not pts:
        return 0.0
    pts.sort()
    area = 0.0
    best_y = ref[1]
    for x, y in pts:
        if y < best_y:
            area += (ref[0] - x) * (best_y - y)
            best_y = y
    return area


def naive_greedy(oracle, n: int, k: int) -> tuple[int, ...]:
    """Re-evaluate every candidate's gain at each step; argmax, first index wins."""
    selected: list[int] = []
    remaining = list(range(n))
    for _ in range(k):
        gains = np.array([oracle.gain(i) for i in remaining])
        choice = remaining[int(np.argmax(gains))]
        selected.append(choice)
        remaining.remove(choice)
        oracle.add(choice)
    return tuple(selected)


def best_subset_value(n: int, k: int, set_value) -> float:
    """Exhaustive maximum of set_value over all k-subsets of range(n)."""
    return max(set_value(combo) for combo in itertools.combinations(range(n), k))


def gaussian_sphere_sample(m: int, n: int, seed: int) -> np.ndarray:
    """Uniform positive-orthant points on the Euclidean sphere, the long way."""
    rng = np.random.default_rng(seed)
    g = np.abs(rng.standard_normal((n, m)))
    return g / np.linalg.norm(g, axis=1, keepdims=True)


def two_sample_chi2(a: np.ndarray, b: np.ndarray, bins: int):
    """Two-sample chi-squared statistic on a shared equal-width binning."""
    edges = np.linspace(0.0, 1.0, bins + 1)
    ca, _ = np.histogram(a, bins=edges)
    cb, _ = np.histogram(b, bins=edges)
    mask = (ca + cb) > 0
    ca = ca[mask].astype(float)
    cb = cb[mask].astype(float)
    # equal sample sizes: sum (a-b)^2 / (a+b) ~ chi2 with (cells - 1) dof
    stat = float(((ca - cb) ** 2 / (ca + cb)).sum())
    return stat, int(mask.sum()) - 1

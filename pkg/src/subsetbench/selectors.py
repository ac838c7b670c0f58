"""The ten subset-selection methods and their shared dispatcher.

Greedy indicator maximizers (ghss, gahss, gigdss, gigd+ss) ride on the lazy
greedy engine. The rest are direct constructions: farthest-point traversal
(dss) and its randomized repair loop (idss), clustering representatives
(css-mea via k-means, css-med via k-medoids Voronoi iteration), and
reference-vector nearest-candidate picks (rvss-pd / rvss-ad).

Every floating-point tie anywhere falls to the smallest candidate index.
Selections are index sets except for rvss, which keeps duplicates when
several vectors agree on a candidate.
"""
from __future__ import annotations

import time

import numpy as np
from scipy.spatial.distance import cdist

from .core import Deadline, PointSet, Seed, SelectionResult, ideal_nadir, reference_point
from .greedy import ApproxHypervolumeGain, CoverageGain, HypervolumeGain, lazy_greedy
from .hypervolume import DirectionVectorSet, generate_directions
from .refvectors import ReferenceVectorSet, vectors_for_k

__all__ = [
    "select_ghss",
    "select_gahss",
    "select_gigdss",
    "select_gigdpss",
    "select_dss",
    "select_idss",
    "select_css_means",
    "select_css_medoids",
    "select_rvss",
    "SELECTORS",
    "RANDOMIZED_METHODS",
    "run_selector",
]

DEFAULT_REF_FACTOR = 1.2
DEFAULT_DIRECTION_COUNT = 100
DEFAULT_DIRECTION_SEED = 0
DEFAULT_MAX_ITER = 1000


def _validate_k(n: int, k: int) -> None:
    if not 0 < k <= n:
        raise ValueError(f"k must be in [1, {n}], got {k}")


def _finalize(result: SelectionResult, method: str, params: dict, seed: int | None) -> SelectionResult:
    result.method = method
    result.params = params
    result.seed = seed
    return result


def _default_ref(candidates: PointSet, ref_point, ref_factor: float) -> np.ndarray:
    if ref_point is not None:
        return np.asarray(ref_point, dtype=np.float64)
    _, nadir = ideal_nadir(candidates)
    return reference_point(nadir, ref_factor)


def select_ghss(
    candidates: PointSet,
    k: int,
    ref_point=None,
    ref_factor: float = DEFAULT_REF_FACTOR,
    deadline: Deadline | None = None,
) -> SelectionResult:
    """Greedy exact-hypervolume selection (lazy evaluation, WFG contributions)."""
    ref = _default_ref(candidates, ref_point, ref_factor)
    oracle = HypervolumeGain(candidates.points, ref)
    res = lazy_greedy(candidates, k, oracle, deadline)
    return _finalize(res, "ghss", {"ref_point": [float(v) for v in ref]}, None)


def select_gahss(
    candidates: PointSet,
    k: int,
    ref_point=None,
    ref_factor: float = DEFAULT_REF_FACTOR,
    directions: DirectionVectorSet | None = None,
    n_directions: int = DEFAULT_DIRECTION_COUNT,
    direction_seed: int = DEFAULT_DIRECTION_SEED,
    deadline: Deadline | None = None,
) -> SelectionResult:
    """Greedy hypervolume selection with direction-sampled contributions."""
    ref = _default_ref(candidates, ref_point, ref_factor)
    if directions is None:
        directions = generate_directions(candidates.m, n_directions, direction_seed)
    oracle = ApproxHypervolumeGain(candidates.points, ref, directions)
    res = lazy_greedy(candidates, k, oracle, deadline)
    params = {
        "ref_point": [float(v) for v in ref],
        "n_directions": len(directions),
        "direction_seed": direction_seed,
    }
    return _finalize(res, "gahss", params, None)


def _coverage_select(
    candidates: PointSet,
    k: int,
    reference_set,
    mode: str,
    method: str,
    deadline: Deadline | None,
) -> SelectionResult:
    ref = candidates.points if reference_set is None else (
        reference_set.points if isinstance(reference_set, PointSet) else np.asarray(reference_set, float)
    )
    oracle = CoverageGain(candidates.points, ref, mode=mode)
    res = lazy_greedy(candidates, k, oracle, deadline)
    return _finalize(res, method, {"reference_size": int(len(ref))}, None)


def select_gigdss(candidates, k, reference_set=None, deadline=None) -> SelectionResult:
    """Greedy coverage selection under plain nearest-distance (reference set
    defaults to the candidate set itself)."""
    return _coverage_select(candidates, k, reference_set, "euclidean", "gigdss", deadline)


def select_gigdpss(candidates, k, reference_set=None, deadline=None) -> SelectionResult:
    """Greedy coverage selection under the dominance-aware one-sided distance."""
    return _coverage_select(candidates, k, reference_set, "dominance-gap", "gigd+ss", deadline)


def _dists_to(pts: np.ndarray, row: np.ndarray) -> np.ndarray:
    diff = pts - row[None, :]
    return np.sqrt((diff * diff).sum(axis=1))


def _dss_traversal(
    pts: np.ndarray, k: int, start: int, deadline: Deadline | None
) -> tuple[list[int], np.ndarray, bool]:
    """Farthest-point traversal; returns (indices, min-dist-to-selection, timed_out)."""
    selected = [start]
    mind = _dists_to(pts, pts[start])
    mind[start] = -np.inf  # selected entries never re-picked
    for _ in range(k - 1):
        if deadline is not None and deadline.expired():
            return selected, mind, True
        nxt = int(np.argmax(mind))
        selected.append(nxt)
        np.minimum(mind, _dists_to(pts, pts[nxt]), out=mind)
        mind[nxt] = -np.inf
    return selected, mind, False


def select_dss(candidates: PointSet, k: int, deadline: Deadline | None = None) -> SelectionResult:
    """Farthest-point traversal from the candidate with the largest objective sum."""
    pts = candidates.points
    _validate_k(len(pts), k)
    start_t = time.perf_counter()
    first = int(np.argmax(pts.sum(axis=1)))
    selected, _, timed_out = _dss_traversal(pts, k, first, deadline)
    res = SelectionResult(
        indices=tuple(selected),
        method="dss",
        k=k,
        runtime_seconds=time.perf_counter() - start_t,
        timed_out=timed_out,
    )
    return _finalize(res, "dss", {"init": "max-objective-sum"}, None)


def _subset_min_pair(sub_pts: np.ndarray) -> tuple[int, int, float, np.ndarray]:
    """Closest pair inside the subset (positions, distance, full pair matrix)."""
    d = cdist(sub_pts, sub_pts)
    np.fill_diagonal(d, np.inf)
    flat = int(np.argmin(d))  # row-major: deterministic on ties
    a, b = divmod(flat, len(sub_pts))
    return a, b, float(d[a, b]), d


def select_idss(
    candidates: PointSet,
    k: int,
    max_iter: int = DEFAULT_MAX_ITER,
    seed: Seed | int = 0,
    deadline: Deadline | None = None,
) -> SelectionResult:
    """Randomized repair of a farthest-point selection.

    Starts from the traversal seeded at a random candidate, then repeatedly
    breaks up the closest selected pair: one endpoint (coin flip) is dropped
    and the candidate farthest from the remainder is added back. Moves that
    would lower the minimum pairwise distance are rejected, so the final
    spread never falls below the starting traversal's.
    """
    pts = candidates.points
    n = len(pts)
    _validate_k(n, k)
    sd = Seed.coerce(seed)
    rng = sd.rng()
    start_t = time.perf_counter()
    first = int(rng.integers(n))
    selected, mind, timed_out = _dss_traversal(pts, k, first, deadline)

    def _result(sel, t_out):
        res = SelectionResult(
            indices=tuple(sel),
            method="idss",
            k=k,
            runtime_seconds=time.perf_counter() - start_t,
            timed_out=t_out,
        )
        return _finalize(res, "idss", {"max_iter": max_iter, "init_index": first}, sd.value)

    if timed_out or k < 2:
        return _result(selected, timed_out)

    subset = list(selected)
    # mind/nearest track each candidate's closest subset member (members map to
    # themselves at distance 0); repaired locally on remove, merged on add.
    nearest = np.empty(n, dtype=np.intp)
    mind = np.full(n, np.inf)
    for idx in subset:
        d = _dists_to(pts, pts[idx])
        closer = d < mind
        mind[closer] = d[closer]
        nearest[closer] = idx

    for _ in range(max_iter):
        if deadline is not None and deadline.expired():
            return _result(subset, True)
        a, b, current_min, pair_d = _subset_min_pair(pts[subset])
        drop_pos = a if int(rng.integers(2)) == 0 else b
        drop = subset[drop_pos]
        remainder = subset[:drop_pos] + subset[drop_pos + 1 :]

        saved_mind, saved_nearest = mind.copy(), nearest.copy()
        rem_pts = pts[remainder]
        stale = np.flatnonzero(nearest == drop)
        if len(stale):
            d_stale = cdist(pts[stale], rem_pts)
            pos = d_stale.argmin(axis=1)
            mind[stale] = d_stale[np.arange(len(stale)), pos]
            nearest[stale] = np.asarray(remainder, dtype=np.intp)[pos]
        scored = mind.copy()
        scored[remainder] = -np.inf
        incoming = int(np.argmax(scored))

        d_in = _dists_to(rem_pts, pts[incoming])
        keep_rows = np.delete(np.arange(len(subset)), drop_pos)
        trimmed = pair_d[np.ix_(keep_rows, keep_rows)]
        new_min = min(float(trimmed.min()) if len(remainder) > 1 else np.inf, float(d_in.min()))
        if new_min >= current_min:
            subset = remainder + [incoming]
            d_all = _dists_to(pts, pts[incoming])
            closer = d_all < mind
            mind[closer] = d_all[closer]
            nearest[closer] = incoming
        else:
            mind, nearest = saved_mind, saved_nearest
    return _result(subset, False)


def _distinct_row_indices(pts: np.ndarray) -> np.ndarray:
    _, first = np.unique(pts, axis=0, return_index=True)
    return np.sort(first)


def _init_indices(pts: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    distinct = _distinct_row_indices(pts)
    if len(distinct) < k:
        raise ValueError(f"k={k} exceeds the {len(distinct)} distinct candidate points")
    return distinct[rng.choice(len(distinct), size=k, replace=False)]


def _nearest_center(pts: np.ndarray, centers: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per point: (nearest center position, distance). Chunked; ties to lowest position."""
    n = len(pts)
    assign = np.empty(n, dtype=np.intp)
    dist = np.empty(n)
    chunk = max(1, int(20_000_000 // max(1, len(centers))))
    for lo in range(0, n, chunk):
        d = cdist(pts[lo : lo + chunk], centers)
        assign[lo : lo + chunk] = d.argmin(axis=1)
        dist[lo : lo + chunk] = d[np.arange(len(d)), assign[lo : lo + chunk]]
    return assign, dist


def _reseed_empty(assign: np.ndarray, dist: np.ndarray, counts: np.ndarray) -> None:
    # an empty cluster grabs the point worst served by the current centers
    scored = dist.copy()
    for cluster in np.flatnonzero(counts == 0):
        pick = int(np.argmax(scored))
        assign[pick] = cluster
        scored[pick] = -np.inf


def _cluster_medoid(pts: np.ndarray, members: np.ndarray) -> int:
    totals = cdist(pts[members], pts[members]).sum(axis=1)
    return int(members[int(np.argmin(totals))])


def select_css_means(
    candidates: PointSet,
    k: int,
    max_iter: int = DEFAULT_MAX_ITER,
    seed: Seed | int = 0,
    deadline: Deadline | None = None,
) -> SelectionResult:
    """Lloyd k-means, then each cluster's smallest-total-distance member."""
    pts = candidates.points
    n = len(pts)
    _validate_k(n, k)
    sd = Seed.coerce(seed)
    rng = sd.rng()
    start_t = time.perf_counter()
    centers = pts[_init_indices(pts, k, rng)].copy()
    assign = None
    timed_out = False
    iterations = 0
    for _ in range(max_iter):
        if deadline is not None and deadline.expired():
            timed_out = True
            break
        new_assign, dist = _nearest_center(pts, centers)
        counts = np.bincount(new_assign, minlength=k)
        if (counts == 0).any():
            _reseed_empty(new_assign, dist, counts)
            counts = np.bincount(new_assign, minlength=k)
        if assign is not None and np.array_equal(new_assign, assign):
            break
        assign = new_assign
        iterations += 1
        centers = np.stack(
            [np.bincount(assign, weights=pts[:, j], minlength=k) for j in range(pts.shape[1])],
            axis=1,
        )
        centers /= counts[:, None]
    if assign is None:  # timed out before the first pass
        return _finalize(
            SelectionResult((), "css-mea", k, time.perf_counter() - start_t, True),
            "css-mea",
            {"max_iter": max_iter},
            sd.value,
        )
    chosen = [_cluster_medoid(pts, np.flatnonzero(assign == c)) for c in range(k)]
    res = SelectionResult(
        indices=tuple(chosen),
        method="css-mea",
        k=k,
        runtime_seconds=time.perf_counter() - start_t,
        timed_out=timed_out,
    )
    return _finalize(res, "css-mea", {"max_iter": max_iter, "iterations": iterations}, sd.value)


def select_css_medoids(
    candidates: PointSet,
    k: int,
    max_iter: int = DEFAULT_MAX_ITER,
    seed: Seed | int = 0,
    deadline: Deadline | None = None,
) -> SelectionResult:
    """k-medoids by Voronoi iteration: assign to medoids, re-pick each
    cluster's smallest-total-distance member, repeat to a fixed point."""
    pts = candidates.points
    n = len(pts)
    _validate_k(n, k)
    sd = Seed.coerce(seed)
    rng = sd.rng()
    start_t = time.perf_counter()
    medoids = _init_indices(pts, k, rng).tolist()
    timed_out = False
    iterations = 0
    for _ in range(max_iter):
        if deadline is not None and deadline.expired():
            timed_out = True
            break
        assign, dist = _nearest_center(pts, pts[medoids])
        counts = np.bincount(assign, minlength=k)
        if (counts == 0).any():
            _reseed_empty(assign, dist, counts)
        iterations += 1
        new_medoids = [_cluster_medoid(pts, np.flatnonzero(assign == c)) for c in range(k)]
        if new_medoids == medoids:
            break
        medoids = new_medoids
    res = SelectionResult(
        indices=tuple(medoids),
        method="css-med",
        k=k,
        runtime_seconds=time.perf_counter() - start_t,
        timed_out=timed_out,
    )
    return _finalize(res, "css-med", {"max_iter": max_iter, "iterations": iterations}, sd.value)


def select_rvss(
    candidates: PointSet,
    k: int,
    ref_vectors: ReferenceVectorSet | None = None,
    distance: str = "perpendicular",
    translate_by_ideal: bool = True,
    deadline: Deadline | None = None,
) -> SelectionResult:
    """Per reference vector, the candidate nearest to its ray.

    ``distance`` is "perpendicular" (offset from the line through the vector)
    or "angle" (1 - cosine). Candidates are first translated by the ideal
    point unless disabled. One candidate may serve several vectors, so the
    result can repeat indices; a candidate sitting exactly at the ideal point
    has no direction, and under the angle distance it is picked only when
    nothing else exists.
    """
    if distance not in ("perpendicular", "angle"):
        raise ValueError(f"unknown rvss distance: {distance}")
    pts = candidates.points
    n = len(pts)
    # k may exceed n: one pick per vector, the same candidate may serve many
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if ref_vectors is None:
        ref_vectors = vectors_for_k(candidates.m, k)
    if len(ref_vectors) != k:
        raise ValueError(f"need exactly k={k} reference vectors, got {len(ref_vectors)}")
    start_t = time.perf_counter()
    shifted = pts - ideal_nadir(candidates)[0] if translate_by_ideal else pts
    vecs = ref_vectors.vectors
    sq_norm = (shifted * shifted).sum(axis=1)
    chosen: list[int] = []
    timed_out = False
    block = max(1, int(20_000_000 // max(1, n)))
    for lo in range(0, k, block):
        if deadline is not None and deadline.expired():
            timed_out = True
            break
        vb = vecs[lo : lo + block]
        proj = shifted @ vb.T  # (n, b)
        if distance == "perpendicular":
            d = sq_norm[:, None] - proj**2 / (vb * vb).sum(axis=1)[None, :]
            np.clip(d, 0.0, None, out=d)
        else:
            norms = np.sqrt(sq_norm)
            with np.errstate(divide="ignore", invalid="ignore"):
                d = 1.0 - proj / (norms[:, None] * np.linalg.norm(vb, axis=1)[None, :])
            d[norms == 0.0, :] = np.inf
        chosen.extend(int(i) for i in d.argmin(axis=0))
    res = SelectionResult(
        indices=tuple(chosen),
        method=f"rvss-{'pd' if distance == 'perpendicular' else 'ad'}",
        k=k,
        runtime_seconds=time.perf_counter() - start_t,
        timed_out=timed_out,
    )
    name = "rvss-pd" if distance == "perpendicular" else "rvss-ad"
    return _finalize(res, name, {"distance": distance, "translate_by_ideal": translate_by_ideal}, None)


def _rvss_pd(candidates, k, seed=None, deadline=None, **kw):
    return select_rvss(candidates, k, distance="perpendicular", deadline=deadline, **kw)


def _rvss_ad(candidates, k, seed=None, deadline=None, **kw):
    return select_rvss(candidates, k, distance="angle", deadline=deadline, **kw)


def _no_seed(fn):
    def wrapper(candidates, k, seed=None, deadline=None, **kw):
        return fn(candidates, k, deadline=deadline, **kw)

    return wrapper


def _seeded(fn):
    def wrapper(candidates, k, seed=None, deadline=None, **kw):
        return fn(candidates, k, seed=seed if seed is not None else 0, deadline=deadline, **kw)

    return wrapper


SELECTORS = {
    "ghss": _no_seed(select_ghss),
    "gahss": _no_seed(select_gahss),
    "gigdss": _no_seed(select_gigdss),
    "gigd+ss": _no_seed(select_gigdpss),
    "dss": _no_seed(select_dss),
    "idss": _seeded(select_idss),
    "css-mea": _seeded(select_css_means),
    "css-med": _seeded(select_css_medoids),
    "rvss-pd": _rvss_pd,
    "rvss-ad": _rvss_ad,
}

METHOD_ALIASES = {"gigdpss": "gigd+ss"}
RANDOMIZED_METHODS = frozenset({"idss", "css-mea", "css-med"})


def run_selector(
    method: str,
    candidates: PointSet,
    k: int,
    seed: Seed | int | None = None,
    deadline: Deadline | None = None,
    **params,
) -> SelectionResult:
    """Dispatch by method id ("ghss", "rvss-pd", ...)."""
    key = METHOD_ALIASES.get(method, method)
    try:
        fn = SELECTORS[key]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; known: {sorted(SELECTORS)}") from None
    sd = None if seed is None else Seed.coerce(seed).value
    return fn(candidates, k, seed=sd, deadline=deadline, **params)

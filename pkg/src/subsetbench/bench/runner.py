"""Suite execution: evaluate cells, honor time limits, resume, fan out."""
from __future__ import annotations

import os
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from functools import lru_cache
from pathlib import Path

import numpy as np

from ..core import Deadline, PointSet
from ..hypervolume import hv_exact
from ..indicators import eps_plus, igd, igd_plus, uniformity
from ..sampler import FrontKind, FrontSpec, generate_front
from ..selectors import run_selector
from .io import load_points
from .manifest import DatasetEntry, SuiteManifest
from .records import RunRecord, append_records, load_records

__all__ = ["evaluate_subset", "run_cell", "run_suite", "worker_count"]

WORKERS_ENV = "SUBSETBENCH_WORKERS"


def worker_count(requested: int | None = None) -> int:
    """Explicit argument, else the environment override, else 1."""
    if requested is not None:
        if requested < 1:
            raise ValueError("worker count must be >= 1")
        return requested
    env = os.environ.get(WORKERS_ENV)
    if env:
        n = int(env)
        if n < 1:
            raise ValueError(f"{WORKERS_ENV} must be >= 1")
        return n
    return 1


def evaluate_subset(
    subset: PointSet,
    reference: PointSet,
    hv_ref_point,
    metrics=("hv", "igd", "igd_plus", "eps_plus", "uniformity"),
) -> dict:
    """Metric dict for a selected subset against its reference set."""
    out: dict[str, float] = {}
    for name in metrics:
        if name == "hv":
            out["hv"] = hv_exact(subset, hv_ref_point)
        elif name == "igd":
            out["igd"] = igd(subset, reference)
        elif name == "igd_plus":
            out["igd_plus"] = igd_plus(subset, reference)
        elif name == "eps_plus":
            out["eps_plus"] = eps_plus(subset, reference)
        elif name == "uniformity":
            out["uniformity"] = uniformity(subset)
        else:
            raise ValueError(f"unknown metric {name!r}")
    return out


@lru_cache(maxsize=4)
def _load_front(kind: str, m: int, n: int, seed: int) -> PointSet:
    return generate_front(FrontSpec(FrontKind(kind), m, n, seed))


@lru_cache(maxsize=4)
def _load_file(path: str) -> PointSet:
    return load_points(path)


def _materialize(entry_dict: dict, base: str) -> tuple[PointSet, PointSet, np.ndarray]:
    """(candidates, reference set, hv reference point) for one dataset entry."""
    entry = DatasetEntry.from_dict(entry_dict)
    factor = entry_dict.get("_hv_ref_factor", 1.2)
    if entry.front is not None:
        cands = _load_front(entry.front.kind.value, entry.front.m, entry.front.n, entry.front.seed)
        # the sampled families all have an all-ones true nadir
        hv_ref = np.full(cands.m, factor)
    else:
        cands = _load_file(str(Path(base) / entry.path))
        hv_ref = None
    reference = cands
    if entry.reference_path is not None:
        reference = _load_file(str(Path(base) / entry.reference_path))
    if entry.hv_ref_point is not None:
        hv_ref = np.asarray(entry.hv_ref_point, dtype=np.float64)
    if hv_ref is None:
        # external archive without explicit reference: scale its own nadir
        hv_ref = factor * reference.points.max(axis=0)
    return cands, reference, hv_ref


def run_cell(
    entry_dict: dict,
    method: str,
    k: int,
    seed: int | None,
    time_limit: float | None,
    metrics: tuple,
    params: dict | None = None,
    base: str = ".",
) -> RunRecord:
    """Select on one dataset, then score the subset (scoring is outside the budget)."""
    cands, reference, hv_ref = _materialize(entry_dict, base)
    deadline = None if time_limit is None else Deadline(time_limit)
    result = run_selector(method, cands, k, seed=seed, deadline=deadline, **(params or {}))
    if result.timed_out:
        return RunRecord(
            dataset=entry_dict["id"],
            method=result.method,
            k=k,
            seed=seed,
            runtime_seconds=result.runtime_seconds,
            timed_out=True,
            params=result.params,
        )
    subset = cands.take(result.indices)
    values = evaluate_subset(subset, reference, hv_ref, metrics)
    return RunRecord(
        dataset=entry_dict["id"],
        method=result.method,
        k=k,
        seed=seed,
        runtime_seconds=result.runtime_seconds,
        timed_out=False,
        metrics=values,
        params=result.params,
    )


def _cell_args(manifest: SuiteManifest, base: str) -> list[tuple]:
    tasks = []
    for ds in manifest.datasets:
        entry = ds.to_dict()
        entry["_hv_ref_factor"] = manifest.hv_ref_factor
        if ds.front is not None:
            m = ds.front.m
        else:
            m = load_points(str(Path(base) / ds.path)).m
        k = manifest.k_for(m)
        for sel in manifest.selectors:
            for seed in sel.seeds:
                tasks.append(
                    (
                        entry,
                        sel.method,
                        k,
                        seed,
                        manifest.time_limit_seconds,
                        tuple(manifest.metrics),
                        dict(sel.params),
                        base,
                    )
                )
    return tasks


def run_suite(
    manifest: SuiteManifest,
    out_path: str | os.PathLike,
    workers: int | None = None,
    resume: bool = True,
    base: str = ".",
    progress=None,
) -> list[RunRecord]:
    """Run every cell of the manifest, appending JSONL records to ``out_path``.

    With ``resume`` (default), cells already present in the output file are
    skipped, so an interrupted run picks up where it stopped. Workers > 1 fan
    cells out to processes; records are still written by this process only.
    """
    manifest.check_files(base)
    out_path = Path(out_path)
    done: set[tuple] = set()
    existing: list[RunRecord] = []
    if resume and out_path.exists():
        existing = load_records(out_path)
        done = {rec.cell for rec in existing}
    tasks = [
        t for t in _cell_args(manifest, base) if (t[0]["id"], t[1], t[3]) not in done
    ]
    n_workers = worker_count(workers)
    fresh: list[RunRecord] = []

    def _emit(rec: RunRecord) -> None:
        append_records(out_path, [rec])
        fresh.append(rec)
        if progress is not None:
            progress(rec)

    if n_workers == 1 or len(tasks) <= 1:
        for t in tasks:
            _emit(run_cell(*t))
    else:
        with ProcessPoolExecutor(max_workers=n_workers) as pool:
            pending = {pool.submit(run_cell, *t) for t in tasks}
            while pending:
                finished, pending = wait(pending, return_when=FIRST_COMPLETED)
                for fut in finished:
                    _emit(fut.result())
    return existing + fresh

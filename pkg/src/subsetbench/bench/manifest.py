"""Benchmark suite manifests.

A manifest pins everything a run needs: datasets (sampled fronts or external
files), selector configurations with their seeds, subset sizes, metric list,
hypervolume referencing, and the per-cell time limit. Presets mirror the
standard sampled suites: the full grid (six kinds x n in {10K, 100K, 1M} x
m in {3, 5, 8, 10}, 72 sets) and the small grid (m in {5, 10}, n in
{100K, 1M}, 24 sets).
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from ..core import Seed
from ..refvectors import default_k
from ..sampler import GENERATOR_NAME, FrontKind, FrontSpec
from ..selectors import METHOD_ALIASES, RANDOMIZED_METHODS, SELECTORS
from .records import METRIC_NAMES

__all__ = ["DatasetEntry", "SelectorEntry", "SuiteManifest", "full_suite", "small_suite"]

DEFAULT_TIME_LIMIT = 3600.0
DEFAULT_REPEATS = 10
SUITE_SIZES = (10_000, 100_000, 1_000_000)
SUITE_OBJECTIVES = (3, 5, 8, 10)


@dataclass
class DatasetEntry:
    """One candidate set: either a front recipe or a file on disk."""

    id: str
    front: FrontSpec | None = None
    path: str | None = None
    reference_path: str | None = None  # reference set for igd-style metrics
    hv_ref_point: list | None = None   # overrides factor * true nadir

    def __post_init__(self):
        if (self.front is None) == (self.path is None):
            raise ValueError(f"dataset {self.id!r}: exactly one of front/path required")

    def to_dict(self) -> dict:
        d: dict = {"id": self.id}
        if self.front is not None:
            d["front"] = {
                "kind": self.front.kind.value,
                "m": self.front.m,
                "n": self.front.n,
                "seed": self.front.seed,
            }
        if self.path is not None:
            d["path"] = self.path
        if self.reference_path is not None:
            d["reference_path"] = self.reference_path
        if self.hv_ref_point is not None:
            d["hv_ref_point"] = list(self.hv_ref_point)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "DatasetEntry":
        front = None
        if "front" in d:
            f = d["front"]
            front = FrontSpec(FrontKind(f["kind"]), int(f["m"]), int(f["n"]), int(f["seed"]))
        return cls(
            id=d["id"],
            front=front,
            path=d.get("path"),
            reference_path=d.get("reference_path"),
            hv_ref_point=d.get("hv_ref_point"),
        )


@dataclass
class SelectorEntry:
    """One selector configuration; seeds list drives repeats."""

    method: str
    seeds: list[int] | None = None
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        self.method = METHOD_ALIASES.get(self.method, self.method)
        if self.method not in SELECTORS:
            raise ValueError(f"unknown method {self.method!r}; known: {sorted(SELECTORS)}")
        if self.seeds is None:
            self.seeds = list(range(DEFAULT_REPEATS)) if self.method in RANDOMIZED_METHODS else [0]
        if not self.seeds:
            raise ValueError(f"selector {self.method!r}: empty seed list")

    def to_dict(self) -> dict:
        d: dict = {"method": self.method, "seeds": list(self.seeds)}
        if self.params:
            d["params"] = dict(self.params)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SelectorEntry":
        return cls(method=d["method"], seeds=d.get("seeds"), params=d.get("params") or {})


@dataclass
class SuiteManifest:
    name: str
    datasets: list[DatasetEntry]
    selectors: list[SelectorEntry]
    k: int | None = None               # None: default per dataset's m
    metrics: list[str] = field(default_factory=lambda: list(METRIC_NAMES))
    hv_ref_factor: float = 1.2
    time_limit_seconds: float | None = DEFAULT_TIME_LIMIT
    generator: str = GENERATOR_NAME

    def __post_init__(self):
        ids = [d.id for d in self.datasets]
        if len(set(ids)) != len(ids):
            raise ValueError("dataset ids must be unique")
        unknown = set(self.metrics) - set(METRIC_NAMES)
        if unknown:
            raise ValueError(f"unknown metrics: {sorted(unknown)}")
        if self.time_limit_seconds is not None and self.time_limit_seconds < 0:
            raise ValueError("time limit must be >= 0")

    def check_files(self, base: str | os.PathLike = ".") -> None:
        """Referenced files must exist before a run starts."""
        base = Path(base)
        for ds in self.datasets:
            for p in (ds.path, ds.reference_path):
                if p is not None and not (base / p).exists():
                    raise FileNotFoundError(f"dataset {ds.id!r}: missing file {p}")

    def to_json(self) -> str:
        return json.dumps(
            {
                "name": self.name,
                "generator": self.generator,
                "k": self.k,
                "metrics": list(self.metrics),
                "hv_ref_factor": self.hv_ref_factor,
                "time_limit_seconds": self.time_limit_seconds,
                "datasets": [d.to_dict() for d in self.datasets],
                "selectors": [s.to_dict() for s in self.selectors],
            },
            indent=2,
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "SuiteManifest":
        raw = json.loads(text)
        return cls(
            name=raw["name"],
            datasets=[DatasetEntry.from_dict(d) for d in raw["datasets"]],
            selectors=[SelectorEntry.from_dict(s) for s in raw["selectors"]],
            k=raw.get("k"),
            metrics=raw.get("metrics") or list(METRIC_NAMES),
            hv_ref_factor=raw.get("hv_ref_factor", 1.2),
            time_limit_seconds=raw.get("time_limit_seconds", DEFAULT_TIME_LIMIT),
            generator=raw.get("generator", GENERATOR_NAME),
        )

    @classmethod
    def load(cls, path: str | os.PathLike) -> "SuiteManifest":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))

    def save(self, path: str | os.PathLike) -> None:
        Path(path).write_text(self.to_json() + "\n", encoding="utf-8")

    def k_for(self, m: int) -> int:
        return self.k if self.k is not None else default_k(m)


def _grid(name: str, sizes, objectives, seed: int) -> "SuiteManifest":
    base = Seed.coerce(seed)
    datasets = []
    for kind in FrontKind:
        for m in objectives:
            for n in sizes:
                child = base.spawn(f"front/{kind.value}/m{m}/n{n}")
                spec = FrontSpec(kind, m, n, child.value)
                datasets.append(DatasetEntry(id=spec.dataset_id, front=spec))
    selectors = [SelectorEntry(method=meth) for meth in sorted(SELECTORS)]
    return SuiteManifest(name=name, datasets=datasets, selectors=selectors)


def full_suite(seed: int = 0) -> SuiteManifest:
    """All 72 sampled sets: six kinds x {10K, 100K, 1M} x m in {3, 5, 8, 10}."""
    return _grid("full", SUITE_SIZES, SUITE_OBJECTIVES, seed)


def small_suite(seed: int = 0) -> SuiteManifest:
    """The 24-set grid: six kinds x {100K, 1M} x m in {5, 10}."""
    return _grid("small", (100_000, 1_000_000), (5, 10), seed)

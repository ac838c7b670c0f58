"""Benchmark harness: point-file I/O, run records, manifests, ranking."""
from .io import load_points, save_points, write_sidecar
from .manifest import DatasetEntry, SelectorEntry, SuiteManifest, full_suite, small_suite
from .ranking import LOWER_BETTER, RankTable, rank_aggregate, records_to_table
from .records import METRIC_NAMES, RunRecord, append_records, load_records
from .runner import evaluate_subset, run_cell, run_suite, worker_count

__all__ = [
    "DatasetEntry",
    "LOWER_BETTER",
    "METRIC_NAMES",
    "RankTable",
    "RunRecord",
    "SelectorEntry",
    "SuiteManifest",
    "append_records",
    "evaluate_subset",
    "full_suite",
    "load_points",
    "load_records",
    "rank_aggregate",
    "records_to_table",
    "run_cell",
    "run_suite",
    "save_points",
    "small_suite",
    "worker_count",
]

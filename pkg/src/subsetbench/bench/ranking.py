"""Cross-method rank aggregation.

Per dataset row, methods are ranked 1..n on a metric (orientation-aware),
exact ties averaged. Methods with no value (timed out) share the worst
remaining positions, also averaged: with ten methods and two missing both get
(9+10)/2 = 9.5, with three missing all get 9.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from .records import RunRecord

__all__ = ["LOWER_BETTER", "rank_row", "RankTable", "rank_aggregate", "records_to_table"]

LOWER_BETTER = {
    "hv": False,
    "uniformity": False,
    "igd": True,
    "igd_plus": True,
    "eps_plus": True,
    "runtime_seconds": True,
}


def rank_row(values, lower_better: bool) -> np.ndarray:
    """Ranks for one dataset row; ``None``/NaN entries share the worst ranks."""
    vals = np.asarray([np.nan if v is None else float(v) for v in values], dtype=np.float64)
    n = len(vals)
    present = ~np.isnan(vals)
    n_present = int(present.sum())
    if n_present == 0:
        raise ValueError("cannot rank a row with no values at all")
    oriented = vals[present] if lower_better else -vals[present]
    ranks = np.empty(n, dtype=np.float64)
    ranks[present] = rankdata(oriented, method="average")
    ranks[~present] = (n_present + 1 + n) / 2.0
    return ranks


@dataclass
class RankTable:
    metric: str
    methods: list[str]
    datasets: list[str]
    values: np.ndarray  # (datasets, methods), NaN = missing
    ranks: np.ndarray   # same shape

    @property
    def average_ranks(self) -> np.ndarray:
        return self.ranks.mean(axis=0)

    def to_csv(self) -> str:
        lines = ["dataset," + ",".join(self.methods)]
        for ds, row_v, row_r in zip(self.datasets, self.values, self.ranks):
            cells = [
                ("" if np.isnan(v) else repr(float(v))) + f" ({r:g})"
                for v, r in zip(row_v, row_r)
            ]
            lines.append(ds + "," + ",".join(cells))
        lines.append("avg-rank," + ",".join(f"{r:g}" for r in self.average_ranks))
        return "\n".join(lines) + "\n"

    def to_long_csv(self) -> str:
        lines = ["metric,dataset,method,value,rank"]
        for ds, row_v, row_r in zip(self.datasets, self.values, self.ranks):
            for meth, v, r in zip(self.methods, row_v, row_r):
                val = "" if np.isnan(v) else repr(float(v))
                lines.append(f"{self.metric},{ds},{meth},{val},{r:g}")
        return "\n".join(lines) + "\n"


def rank_aggregate(metric: str, table: dict, methods: list[str] | None = None) -> RankTable:
    """Rank a {dataset: {method: value or None}} table on one metric."""
    try:
        lower = LOWER_BETTER[metric]
    except KeyError:
        raise ValueError(f"unknown metric {metric!r}; known: {sorted(LOWER_BETTER)}") from None
    datasets = list(table)
    if methods is None:
        methods = sorted({m for row in table.values() for m in row})
    values = np.full((len(datasets), len(methods)), np.nan)
    for i, ds in enumerate(datasets):
        for j, meth in enumerate(methods):
            v = table[ds].get(meth)
            if v is not None:
                values[i, j] = float(v)
    ranks = np.vstack([rank_row(row, lower) for row in values]) if datasets else np.empty((0, len(methods)))
    return RankTable(metric, list(methods), datasets, values, ranks)


def records_to_table(records: list[RunRecord], metric: str) -> dict:
    """Collapse run records to {dataset: {method: value}}, averaging over seeds.

    A (dataset, method) cell is missing when every seeded run timed out;
    completed repeats are averaged. The pseudo-metric ``runtime_seconds``
    averages selector wall time the same way.
    """
    buckets: dict[str, dict[str, list[float]]] = {}
    seen: dict[str, dict[str, bool]] = {}
    for rec in records:
        row = buckets.setdefault(rec.dataset, {}).setdefault(rec.method, [])
        seen.setdefault(rec.dataset, {}).setdefault(rec.method, True)
        if rec.timed_out:
            continue
        value = rec.runtime_seconds if metric == "runtime_seconds" else rec.metrics.get(metric)
        if value is not None:
            row.append(float(value))
    table: dict[str, dict[str, float | None]] = {}
    for ds, methods in buckets.items():
        table[ds] = {
            meth: (float(np.mean(vals)) if vals else None) for meth, vals in methods.items()
        }
    return table

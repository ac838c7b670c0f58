"""Run records: one JSON line per (dataset, method, seed) cell."""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

__all__ = ["RunRecord", "append_records", "load_records"]

METRIC_NAMES = ("hv", "igd", "igd_plus", "eps_plus", "uniformity")


@dataclass
class RunRecord:
    dataset: str
    method: str
    k: int
    seed: int | None = None
    runtime_seconds: float | None = None
    timed_out: bool = False
    metrics: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.timed_out and self.metrics:
            raise ValueError("a timed-out run must not carry metric values")

    @property
    def cell(self) -> tuple:
        return (self.dataset, self.method, self.seed)

    def to_json(self) -> str:
        return json.dumps(
            {
                "dataset": self.dataset,
                "method": self.method,
                "k": self.k,
                "seed": self.seed,
                "runtime_seconds": self.runtime_seconds,
                "timed_out": self.timed_out,
                "metrics": self.metrics,
                "params": self.params,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, line: str) -> "RunRecord":
        raw = json.loads(line)
        return cls(
            dataset=raw["dataset"],
            method=raw["method"],
            k=int(raw["k"]),
            seed=raw.get("seed"),
            runtime_seconds=raw.get("runtime_seconds"),
            timed_out=bool(raw.get("timed_out", False)),
            metrics=raw.get("metrics") or {},
            params=raw.get("params") or {},
        )


def append_records(path: str | os.PathLike, records) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        for rec in records:
            fh.write(rec.to_json())
            fh.write("\n")


def load_records(path: str | os.PathLike) -> list[RunRecord]:
    out = []
    text = Path(path).read_text(encoding="utf-8")
    for ln, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            out.append(RunRecord.from_json(line))
        except (json.JSONDecodeError, KeyError) as exc:
            raise ValueError(f"{path}:{ln}: malformed run record: {exc}") from None
    return out

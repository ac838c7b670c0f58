"""The benchmark pipeline end to end, at toy scale.

A manifest pins datasets, selectors, seeds, subset size, metrics and the
per-cell time limit. The runner executes every (dataset, selector, seed)
cell, appends one JSON line per cell, and resumes from that file if
interrupted. Rank aggregation then turns the records into per-metric
tables with tie-averaged ranks.

The preset grids used for real runs are built the same way:

    from subsetbench.bench import full_suite, small_suite
    full_suite(seed=0)    # 6 kinds x {10K, 100K, 1M} x m in {3, 5, 8, 10}
    small_suite(seed=0)   # 6 kinds x {100K, 1M} x m in {5, 10}

Those take hours; this demo finishes in seconds.
"""
import tempfile
from pathlib import Path

from subsetbench import FrontKind, FrontSpec
from subsetbench.bench import (
    DatasetEntry,
    SelectorEntry,
    SuiteManifest,
    rank_aggregate,
    records_to_table,
    run_suite,
)

work = Path(tempfile.mkdtemp(prefix="subsetbench-demo-"))

# 1. Two tiny datasets, three selectors. The randomized selector gets
#    three seeds, the deterministic ones run once.
manifest = SuiteManifest(
    name="demo",
    datasets=[
        DatasetEntry(id="lin-m3", front=FrontSpec(FrontKind.LINEAR_TRIANGULAR, 3, 1500, 1)),
        DatasetEntry(id="conv-m3", front=FrontSpec(FrontKind.CONVEX_TRIANGULAR, 3, 1500, 1)),
    ],
    selectors=[
        SelectorEntry(method="dss"),
        SelectorEntry(method="css-mea", seeds=[0, 1, 2]),
        SelectorEntry(method="rvss-pd"),
    ],
    k=30,
    metrics=["igd", "uniformity"],
    time_limit_seconds=60.0,
)
manifest.save(work / "manifest.json")

# 2. Run it. Each completed cell lands in the JSONL file immediately, so
#    rerunning the same call skips everything already done.
records = run_suite(manifest, work / "results.jsonl", base=str(work))
print(f"{len(records)} records written to {work / 'results.jsonl'}")

# 3. Collapse seeds and rank the methods per dataset. Lower igd is
#    better; a method that timed out everywhere would share the worst
#    ranks instead of disappearing.
table = rank_aggregate("igd", records_to_table(records, "igd"))
print("\n" + table.to_csv())

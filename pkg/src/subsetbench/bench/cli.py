"""Command-line front end.

Subcommands: generate, ingest, select, evaluate, bench, rank.
Exit codes: 0 success, 2 invalid input, 3 run produced only timeouts,
4 I/O failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from ..core import Deadline, PointSet, nondominated_filter
from ..sampler import GENERATOR_NAME, FrontKind, FrontSpec, generate_front
from ..selectors import SELECTORS, METHOD_ALIASES, run_selector
from .io import FORMATS, load_points, save_points, write_sidecar
from .manifest import SuiteManifest, full_suite, small_suite
from .ranking import LOWER_BETTER, rank_aggregate, records_to_table
from .records import RunRecord, append_records, load_records
from .runner import evaluate_subset, run_suite, worker_count

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_TIMEOUT = 3
EXIT_IO = 4

_METHOD_NAMES = sorted(set(SELECTORS) | set(METHOD_ALIASES))


def _parse_vector(text: str) -> np.ndarray:
    try:
        return np.asarray([float(v) for v in text.split(",")], dtype=np.float64)
    except ValueError:
        raise ValueError(f"expected comma-separated numbers, got {text!r}") from None


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", required=True, help="output path")
    p.add_argument("--format", choices=FORMATS, default="csv", help="point file format")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="subsetbench", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="sample a synthetic front (or a preset suite)")
    g.add_argument("--kind", choices=[k.value for k in FrontKind])
    g.add_argument("--m", type=int, help="number of objectives")
    g.add_argument("--n", type=int, help="number of points")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--preset", choices=["full", "small"], help="write a whole suite instead")
    _add_common(g)

    i = sub.add_parser("ingest", help="re-encode an external archive to a standard format")
    i.add_argument("--in", dest="inp", required=True)
    i.add_argument("--filter", action="store_true", help="drop dominated points (stable order)")
    _add_common(i)

    s = sub.add_parser("select", help="pick a subset from a candidate file")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--method", required=True, choices=_METHOD_NAMES)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--seed", type=int)
    s.add_argument("--time-limit-secs", type=float)
    s.add_argument("--record", help="append the run record to this JSONL file")
    _add_common(s)

    e = sub.add_parser("evaluate", help="score a selected subset")
    e.add_argument("--subset", required=True)
    e.add_argument("--reference-set", required=True, help="reference point set (e.g. the candidate file)")
    e.add_argument("--hv-ref", help="explicit hypervolume reference point, comma-separated")
    e.add_argument("--true-nadir", help="true front nadir, comma-separated; scaled by --hv-factor")
    e.add_argument("--hv-factor", type=float, default=1.2)
    e.add_argument("--metrics", default="hv,igd,igd_plus,eps_plus,uniformity")
    e.add_argument("--dataset", default="adhoc", help="dataset id recorded in the output")
    e.add_argument("--method", default="external", help="method id recorded in the output")
    e.add_argument("--out", help="append the record to this JSONL file")

    b = sub.add_parser("bench", help="run a manifest: every dataset x selector x seed")
    b.add_argument("--manifest", required=True)
    b.add_argument("--out", required=True, help="results JSONL (appended; resumes by default)")
    b.add_argument("--workers", type=int)
    b.add_argument("--no-resume", action="store_true")
    b.add_argument("--deterministic", action="store_true",
                   help="single worker, stable record order")
    b.add_argument("--time-limit-secs", type=float, help="override the manifest's limit")

    r = sub.add_parser("rank", help="aggregate results into rank tables (plot-ready CSV)")
    r.add_argument("--results", required=True)
    r.add_argument("--out-dir", required=True)
    r.add_argument("--metrics", default="hv,igd,igd_plus,eps_plus,uniformity,runtime_seconds")
    return top


def _cmd_generate(args) -> int:
    out = Path(args.out)
    if args.preset:
        suite = full_suite(args.seed) if args.preset == "full" else small_suite(args.seed)
        out.mkdir(parents=True, exist_ok=True)
        for entry in suite.datasets:
            spec = entry.front
            pts = generate_front(spec)
            ext = "csv" if args.format == "csv" else "pss"
            path = out / f"{spec.dataset_id}.{ext}"
            save_points(pts, path, args.format)
            write_sidecar(path, _meta(spec, args.format))
        suite.save(out / f"suite-{suite.name}.json")
        print(f"wrote {len(suite.datasets)} point sets to {out}")
        return EXIT_OK
    if args.kind is None or args.m is None or args.n is None:
        raise ValueError("generate needs --kind/--m/--n (or --preset)")
    spec = FrontSpec(FrontKind(args.kind), args.m, args.n, args.seed)
    pts = generate_front(spec)
    save_points(pts, out, args.format)
    write_sidecar(out, _meta(spec, args.format))
    print(f"wrote {len(pts)} points ({spec.dataset_id}) to {out}")
    return EXIT_OK


def _meta(spec: FrontSpec, fmt: str) -> dict:
    return {
        "dataset_id": spec.dataset_id,
        "kind": spec.kind.value,
        "m": spec.m,
        "n": spec.n,
        "seed": spec.seed,
        "generator": GENERATOR_NAME,
        "format": fmt,
    }


def _cmd_ingest(args) -> int:
    pts = load_points(args.inp)
    kept = nondominated_filter(pts) if args.filter else pts
    save_points(kept, args.out, args.format)
    dropped = len(pts) - len(kept)
    print(f"wrote {len(kept)} points to {args.out}" + (f" (dropped {dropped} dominated)" if args.filter else ""))
    return EXIT_OK


def _cmd_select(args) -> int:
    cands = load_points(args.inp)
    deadline = Deadline(args.time_limit_secs) if args.time_limit_secs is not None else None
    result = run_selector(args.method, cands, args.k, seed=args.seed, deadline=deadline)
    record = RunRecord(
        dataset=cands.label or args.inp,
        method=result.method,
        k=args.k,
        seed=args.seed,
        runtime_seconds=result.runtime_seconds,
        timed_out=result.timed_out,
        params=result.params,
    )
    if args.record:
        append_records(args.record, [record])
    print(record.to_json())
    if result.timed_out:
        return EXIT_TIMEOUT
    save_points(cands.take(result.indices), args.out, args.format)
    return EXIT_OK


def _cmd_evaluate(args) -> int:
    subset = load_points(args.subset)
    reference = load_points(args.reference_set)
    if args.hv_ref:
        hv_ref = _parse_vector(args.hv_ref)
    elif args.true_nadir:
        hv_ref = args.hv_factor * _parse_vector(args.true_nadir)
    else:
        hv_ref = args.hv_factor * reference.points.max(axis=0)
    if len(hv_ref) != subset.m:
        raise ValueError(f"reference point has {len(hv_ref)} components, subset has m={subset.m}")
    metrics = tuple(m.strip() for m in args.metrics.split(",") if m.strip())
    values = evaluate_subset(subset, reference, hv_ref, metrics)
    record = RunRecord(
        dataset=args.dataset,
        method=args.method,
        k=len(subset),
        metrics=values,
        params={"hv_ref_point": [float(v) for v in hv_ref]},
    )
    if args.out:
        append_records(args.out, [record])
    print(record.to_json())
    return EXIT_OK


def _cmd_bench(args) -> int:
    manifest = SuiteManifest.load(args.manifest)
    if args.time_limit_secs is not None:
        manifest.time_limit_seconds = args.time_limit_secs
    workers = 1 if args.deterministic else worker_count(args.workers)
    base = str(Path(args.manifest).parent)
    records = run_suite(
        manifest,
        args.out,
        workers=workers,
        resume=not args.no_resume,
        base=base,
        progress=lambda rec: print(rec.to_json(), file=sys.stderr),
    )
    if records and all(rec.timed_out for rec in records):
        return EXIT_TIMEOUT
    print(f"{len(records)} records in {args.out}")
    return EXIT_OK


def _cmd_rank(args) -> int:
    records = load_records(args.results)
    if not records:
        raise ValueError(f"{args.results}: no records")
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    methods = sorted({rec.method for rec in records})
    wanted = [m.strip() for m in args.metrics.split(",") if m.strip()]
    for metric in wanted:
        if metric not in LOWER_BETTER:
            raise ValueError(f"unknown metric {metric!r}")
        table = records_to_table(records, metric)
        ranked = rank_aggregate(metric, table, methods)
        (out_dir / f"{metric}.csv").write_text(ranked.to_csv(), encoding="utf-8")
        (out_dir / f"{metric}-long.csv").write_text(ranked.to_long_csv(), encoding="utf-8")
    print(f"wrote rank tables for {len(wanted)} metrics to {out_dir}")
    return EXIT_OK


_COMMANDS = {
    "generate": _cmd_generate,
    "ingest": _cmd_ingest,
    "select": _cmd_select,
    "evaluate": _cmd_evaluate,
    "bench": _cmd_bench,
    "rank": _cmd_rank,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

"""Point-set file formats.

Text format: UTF-8 CSV whose first line is ``m=<int>``, then one point per
row. Values are written as the shortest decimal that round-trips to the same
float64, so CSV round-trips are value-exact.

Binary format: magic ``PSS1``, then point count and objective count as
little-endian unsigned 64-bit integers, then the points as little-endian
float64, row-major. Bit-exact round-trip.
"""
from __future__ import annotations

import json
import os
from pathlib import Path

import numpy as np

from ..core import PointSet

__all__ = [
    "save_points",
    "load_points",
    "save_points_csv",
    "load_points_csv",
    "save_points_binary",
    "load_points_binary",
    "write_sidecar",
]

MAGIC = b"PSS1"
FORMATS = ("csv", "bin")


def save_points_csv(points: PointSet, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"m={points.m}\n")
        for row in points.points:
            fh.write(",".join(repr(float(v)) for v in row))
            fh.write("\n")


def load_points_csv(path: str | os.PathLike, label: str | None = None) -> PointSet:
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if not header.startswith("m="):
            raise ValueError(f"{path}: first line must be 'm=<int>', got {header!r}")
        try:
            m = int(header[2:])
        except ValueError:
            raise ValueError(f"{path}: first line must be 'm=<int>', got {header!r}") from None
        try:
            arr = np.loadtxt(fh, delimiter=",", ndmin=2, dtype=np.float64)
        except ValueError as exc:
            raise ValueError(f"{path}: malformed point rows: {exc}") from None
    if arr.size == 0:
        raise ValueError(f"{path}: no points")
    if arr.shape[1] != m:
        raise ValueError(f"{path}: header says m={m} but rows have {arr.shape[1]} columns")
    return PointSet(arr, label=label or Path(path).stem)


def save_points_binary(points: PointSet, path: str | os.PathLike) -> None:
    arr = np.ascontiguousarray(points.points, dtype="<f8")
    with open(path, "wb") as fh:
        fh.write(MAGIC)
        fh.write(np.asarray([len(points), points.m], dtype="<u8").tobytes())
        fh.write(arr.tobytes())


def load_points_binary(path: str | os.PathLike, label: str | None = None) -> PointSet:
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != MAGIC:
            raise ValueError(f"{path}: bad magic {magic!r}, expected {MAGIC!r}")
        n, m = np.frombuffer(fh.read(16), dtype="<u8")
        data = fh.read()
    expected = int(n) * int(m) * 8
    if len(data) != expected:
        raise ValueError(f"{path}: expected {expected} payload bytes, found {len(data)}")
    arr = np.frombuffer(data, dtype="<f8").reshape(int(n), int(m))
    return PointSet(arr, label=label or Path(path).stem)


def _sniff_format(path: str | os.PathLike) -> str:
    with open(path, "rb") as fh:
        return "bin" if fh.read(4) == MAGIC else "csv"


def save_points(points: PointSet, path: str | os.PathLike, fmt: str = "csv") -> None:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; valid: {FORMATS}")
    if fmt == "csv":
        save_points_csv(points, path)
    else:
        save_points_binary(points, path)


def load_points(path: str | os.PathLike, fmt: str | None = None, label: str | None = None) -> PointSet:
    if fmt is None:
        fmt = _sniff_format(path)
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; valid: {FORMATS}")
    loader = load_points_csv if fmt == "csv" else load_points_binary
    return loader(path, label=label)


def write_sidecar(path: str | os.PathLike, meta: dict) -> Path:
    """Drop ``<path>.meta.json`` describing how a point file was produced."""
    side = Path(str(path) + ".meta.json")
    side.write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return side

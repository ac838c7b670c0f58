import json

import numpy as np
import pytest

from subsetbench.core import PointSet
from subsetbench.bench.io import (
    load_points,
    load_points_binary,
    load_points_csv,
    save_points,
    save_points_binary,
    save_points_csv,
    write_sidecar,
)


def awkward_points():
    # values with no short decimal representation plus exact ones
    return PointSet(
        [
            [0.1, 1.0 / 3.0, 0.7000000000000001],
            [1e-300, 2.5, 1.2345678901234567],
            [0.0, 1.0, 5e300],
        ],
        label="awkward",
    )


class TestCsv:
    def test_round_trip_value_exact(self, tmp_path):
        path = tmp_path / "pts.csv"
        save_points_csv(awkward_points(), path)
        back = load_points_csv(path)
        assert back.points.tobytes() == awkward_points().points.tobytes()

    def test_header_carries_m(self, tmp_path):
        path = tmp_path / "pts.csv"
        save_points_csv(PointSet([[0.25, 0.75]]), path)
        text = path.read_text().splitlines()
        assert text[0] == "m=2"
        assert text[1] == "0.25,0.75"

    def test_bad_header_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("columns=2\n0.1,0.2\n")
        with pytest.raises(ValueError):
            load_points_csv(path)

    def test_column_mismatch_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("m=3\n0.1,0.2\n")
        with pytest.raises(ValueError):
            load_points_csv(path)

    def test_malformed_value_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("m=2\n0.1,zebra\n")
        with pytest.raises(ValueError):
            load_points_csv(path)


class TestBinary:
    def test_round_trip_bit_exact(self, tmp_path):
        path = tmp_path / "pts.pss"
        save_points_binary(awkward_points(), path)
        back = load_points_binary(path)
        assert back.points.tobytes() == awkward_points().points.tobytes()

    def test_magic_checked(self, tmp_path):
        path = tmp_path / "bad.pss"
        path.write_bytes(b"NOPE" + b"\x00" * 32)
        with pytest.raises(ValueError):
            load_points_binary(path)

    def test_truncation_detected(self, tmp_path):
        path = tmp_path / "t.pss"
        save_points_binary(PointSet(np.random.default_rng(0).random((10, 3))), path)
        raw = path.read_bytes()
        path.write_bytes(raw[:-8])
        with pytest.raises(ValueError):
            load_points_binary(path)


class TestDispatch:
    def test_format_argument(self, tmp_path):
        ps = PointSet(np.random.default_rng(1).random((20, 4)))
        csv_p, bin_p = tmp_path / "a.csv", tmp_path / "a.pss"
        save_points(ps, csv_p, "csv")
        save_points(ps, bin_p, "bin")
        assert load_points(csv_p).points.tobytes() == ps.points.tobytes()
        assert load_points(bin_p).points.tobytes() == ps.points.tobytes()

    def test_sniffs_binary_regardless_of_name(self, tmp_path):
        ps = PointSet([[0.5, 0.5]])
        path = tmp_path / "disguised.csv"
        save_points(ps, path, "bin")
        assert load_points(path).points.tobytes() == ps.points.tobytes()

    def test_unknown_format(self, tmp_path):
        with pytest.raises(ValueError):
            save_points(PointSet([[0.1, 0.2]]), tmp_path / "x.dat", "parquet")


def test_sidecar(tmp_path):
    path = tmp_path / "front.csv"
    save_points_csv(PointSet([[0.4, 0.6]]), path)
    write_sidecar(path, {"kind": "linear-triangular", "n": 1})
    meta = json.loads((tmp_path / "front.csv.meta.json").read_text())
    assert meta["kind"] == "linear-triangular"

import csv
import io

import numpy as np
import pytest

from subsetbench.bench.ranking import (
    LOWER_BETTER,
    RankTable,
    rank_aggregate,
    rank_row,
    records_to_table,
)
from subsetbench.bench.records import RunRecord

METHODS = (
    "ghss",
    "gahss",
    "gigdss",
    "gigd+ss",
    "dss",
    "idss",
    "css-mea",
    "css-med",
    "rvss-pd",
    "rvss-ad",
)


class TestRankRow:
    def test_maximize_with_missing(self):
        # higher is better: 3 ranks behind 1? no, value 3 ranks 1st, value 1 ranks 2nd,
        # the two absent entries split the two worst slots
        ranks = rank_row([3.0, None, 1.0, None], lower_better=False)
        assert list(ranks) == [1.0, 3.5, 2.0, 3.5]

    def test_ties_average(self):
        ranks = rank_row([5.0, 5.0, 2.0], lower_better=True)
        assert list(ranks) == [2.5, 2.5, 1.0]
        ranks = rank_row([5.0, 5.0, 2.0], lower_better=False)
        assert list(ranks) == [1.5, 1.5, 3.0]

    def test_missing_shares_worst_rank(self):
        # of 10 entries: a single absentee lands at 10, a pair at 9.5, a trio at 9
        base = list(range(10, 0, -1))
        for n_missing, expected in [(1, 10.0), (2, 9.5), (3, 9.0)]:
            row = [float(v) for v in base]
            for i in range(n_missing):
                row[i] = None
            ranks = rank_row(row, lower_better=True)
            assert all(ranks[i] == expected for i in range(n_missing))
            present = ranks[n_missing:]
            assert sorted(present) == [float(r) for r in range(1, 11 - n_missing)]

    def test_all_missing_raises(self):
        with pytest.raises(ValueError):
            rank_row([None, None], lower_better=True)

    def test_nan_treated_as_missing(self):
        ranks = rank_row([1.0, float("nan"), 2.0], lower_better=True)
        assert list(ranks) == [1.0, 3.0, 2.0]


class TestPublishedRows:
    """Two rows transcribed from independently computed result tables."""

    def test_uniformity_row(self):
        values = [4.98e-2, 5.76e-2, None, None, 8.93e-2, 8.09e-2, 8.00e-2, 7.91e-2, 0.0, 0.0]
        ranks = rank_row(values, lower_better=LOWER_BETTER["uniformity"])
        assert list(ranks) == [6.0, 5.0, 9.5, 9.5, 1.0, 2.0, 3.0, 4.0, 7.5, 7.5]

    def test_runtime_row(self):
        values = [1.44e2, 2.57e1, None, None, 7.12e0, 1.31e0, 3.82e1, 8.00e2, 3.54e-1, 2.03e-1]
        ranks = rank_row(values, lower_better=LOWER_BETTER["runtime_seconds"])
        assert list(ranks) == [7.0, 5.0, 9.5, 9.5, 4.0, 3.0, 6.0, 8.0, 2.0, 1.0]


class TestOrientation:
    def test_metric_directions(self):
        assert LOWER_BETTER["hv"] is False
        assert LOWER_BETTER["uniformity"] is False
        for metric in ("igd", "igd_plus", "eps_plus", "runtime_seconds"):
            assert LOWER_BETTER[metric] is True


class TestAggregate:
    def test_table_shape_and_averages(self):
        data = {
            "d1": {"a": 1.0, "b": 2.0},
            "d2": {"a": 4.0, "b": 3.0},
        }
        table = rank_aggregate("igd", data)
        assert table.methods == ["a", "b"]
        assert table.datasets == ["d1", "d2"]
        assert table.ranks.tolist() == [[1.0, 2.0], [2.0, 1.0]]
        assert table.average_ranks.tolist() == [1.5, 1.5]

    def test_method_order_respected(self):
        data = {"d": {"x": 1.0, "y": 2.0}}
        table = rank_aggregate("hv", data, methods=["y", "x"])
        assert table.methods == ["y", "x"]
        assert table.ranks.tolist() == [[1.0, 2.0]]

    def test_missing_cell(self):
        data = {"d": {"a": 1.0, "b": None, "c": 3.0}}
        table = rank_aggregate("igd", data)
        assert table.ranks.tolist() == [[1.0, 3.0, 2.0]]


class TestRecordsToTable:
    def make_records(self):
        recs = []
        for seed, igd in zip(range(3), [0.10, 0.20, 0.30]):
            recs.append(
                RunRecord(
                    dataset="d1", method="dss", k=10, seed=seed,
                    runtime_seconds=1.0 + seed, metrics={"igd": igd},
                )
            )
        recs.append(
            RunRecord(
                dataset="d1", method="idss", k=10, seed=0,
                runtime_seconds=5.0, metrics={"igd": 0.05},
            )
        )
        recs.append(RunRecord(dataset="d1", method="css-mea", k=10, seed=0, timed_out=True))
        return recs

    def test_mean_over_seeds(self):
        data = records_to_table(self.make_records(), "igd")
        assert data["d1"]["dss"] == pytest.approx(0.20)
        assert data["d1"]["idss"] == pytest.approx(0.05)

    def test_timed_out_becomes_missing(self):
        data = records_to_table(self.make_records(), "igd")
        assert data["d1"]["css-mea"] is None

    def test_runtime_pseudo_metric(self):
        data = records_to_table(self.make_records(), "runtime_seconds")
        assert data["d1"]["dss"] == pytest.approx(2.0)
        assert data["d1"]["idss"] == pytest.approx(5.0)


class TestCsvOutput:
    def make_table(self):
        data = {
            "alpha": {"dss": 0.1, "idss": 0.2},
            "beta": {"dss": 0.4, "idss": None},
        }
        return rank_aggregate("igd", data)

    def test_wide_csv_parses(self):
        text = self.make_table().to_csv()
        rows = list(csv.reader(io.StringIO(text)))
        assert rows[0] == ["dataset", "dss", "idss"]
        assert rows[1][0] == "alpha"
        assert rows[-1][0] == "avg-rank"
        # value cell carries both the raw value and its rank
        assert rows[1][1] == "0.1 (1)"
        assert rows[2][2] == " (2)"

    def test_long_csv_parses(self):
        text = self.make_table().to_long_csv()
        rows = list(csv.reader(io.StringIO(text)))
        assert rows[0] == ["metric", "dataset", "method", "value", "rank"]
        body = rows[1:]
        assert len(body) == 4
        by_key = {(r[1], r[2]): r for r in body}
        assert by_key[("alpha", "dss")][3] == "0.1"
        assert by_key[("alpha", "dss")][4] == "1"
        assert by_key[("beta", "idss")][3] == ""

    def test_average_ranks_match_wide_footer(self):
        table = self.make_table()
        rows = list(csv.reader(io.StringIO(table.to_csv())))
        footer = rows[-1][1:]
        for cell, avg in zip(footer, table.average_ranks):
            assert float(cell) == pytest.approx(float(avg))

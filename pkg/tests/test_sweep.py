#
# This file is part of phikrylov.
#
# phikrylov is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License version 2 as
# published by the Free Software Foundation.
#
# phikrylov is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with phikrylov; if not, write to the Free Software Foundation, Inc.
# 51 Franklin Street, Fifth Floor, Boston, MA  02110-1301, USA.
#

import csv
import math

import numpy
import pytest
import scipy.linalg

from libphikrylov.cache import ReferenceCache
from libphikrylov.errors import OutputError, RequestError, UnknownNameError
from libphikrylov.sweep import CSV_COLUMNS, THREADS_ENV, RunRecord
from libphikrylov.sweep import emit_csv, parse_sweep_config, run_sweep
from libphikrylov.sweep import sweep_failed


@pytest.fixture(autouse=True)
def no_thread_cap(monkeypatch):
    monkeypatch.delenv(THREADS_ENV, raising=False)


def semilinear_config(**overrides):
    config = {
        "problem": "semilinear",
        "schemes": ["epirk4s3", "exprb5s3"],
        "n": 12,
        "h": [0.5, 0.25],
        "tol": 1e-12,
    }
    config.update(overrides)
    return config


def allen_cahn_config(**overrides):
    config = {
        "problem": "allen-cahn",
        "scheme": "epirk4s3a",
        "n": 8,
        "h": [0.05, 0.025],
        "tol": 1e-10,
        "tend": 0.1,
    }
    config.update(overrides)
    return config


def read_csv(path):
    with open(path, newline="") as csvfile:
        return list(csv.reader(csvfile))


class TestParseConfig(object):

    def test_defaults(self):
        settings = parse_sweep_config({"problem": "semilinear",
                "scheme": "epirk4s3", "h": 0.1})
        assert settings["schemes"] == ["epirk4s3"]
        assert settings["h"] == [0.1]
        assert settings["n"] == [None]
        assert settings["tol"] == 1e-14
        assert settings["reference"] == "exact"
        assert settings["threads"] == 1
        assert settings["tend"] is None

    def test_self_reference_default(self):
        settings = parse_sweep_config({"problem": "adr",
                "schemes": ["epirk4s3"], "n": [16, 32], "h": [0.01]})
        assert settings["reference"] == "self"
        assert settings["n"] == [16, 32]

    @pytest.mark.parametrize("config", [
            {"problem": "heat", "scheme": "epirk4s3", "h": 0.1},
            {"problem": "adr", "scheme": "rk4", "h": 0.1}])
    def test_unknown_names(self, config):
        with pytest.raises(UnknownNameError):
            parse_sweep_config(config)

    @pytest.mark.parametrize("config", [
            {"problem": "adr", "h": 0.1},
            {"problem": "adr", "scheme": "epirk4s3", "h": []},
            {"problem": "adr", "scheme": "epirk4s3", "h": [0.1, -0.1]},
            {"problem": "adr", "scheme": "epirk4s3", "h": 0.1,
                    "reference": "exact"},
            {"problem": "semilinear", "scheme": "epirk4s3", "h": 0.1,
                    "reference": "ode15s"}])
    def test_bad_requests(self, config):
        with pytest.raises(RequestError):
            parse_sweep_config(config)

    def test_thread_cap(self, monkeypatch):
        base = {"problem": "semilinear", "scheme": "epirk4s3", "h": 0.1}

        monkeypatch.setenv(THREADS_ENV, "3")
        assert parse_sweep_config(base)["threads"] == 3
        assert parse_sweep_config(dict(base, threads=8))["threads"] == 3
        assert parse_sweep_config(dict(base, threads=2))["threads"] == 2

        monkeypatch.setenv(THREADS_ENV, "lots")
        assert parse_sweep_config(base)["threads"] == 1
        assert parse_sweep_config(dict(base, threads=4))["threads"] == 4


class TestRunSweep(object):

    def test_exact_reference(self):
        records = run_sweep(semilinear_config())
        assert [(r.scheme, r.h) for r in records] == [("epirk4s3", 0.5),
                ("epirk4s3", 0.25), ("exprb5s3", 0.5), ("exprb5s3", 0.25)]
        assert not sweep_failed(records)
        for record in records:
            assert record.problem == "semilinear"
            assert record.n == 12
            assert record.tol == 1e-12
            assert math.isfinite(record.error)
            assert record.substeps > 0 and record.matvecs > 0
            assert record.avg_m > 0
            assert record.wall_s >= 0
        assert records[1].error < records[0].error
        assert records[3].error < records[2].error

    def test_self_reference_is_cached(self):
        cache = ReferenceCache()
        first = run_sweep(allen_cahn_config(), cache)
        assert len(cache) == 1
        second = run_sweep(allen_cahn_config(), cache)
        assert len(cache) == 1

        assert not sweep_failed(first)
        assert first[1].error < first[0].error
        assert [r.error for r in first] == [r.error for r in second]

    def test_threads_keep_row_order(self):
        serial = run_sweep(semilinear_config())
        parallel = run_sweep(semilinear_config(threads=4))
        assert [(r.scheme, r.h, r.error) for r in serial] == \
                [(r.scheme, r.h, r.error) for r in parallel]

    def test_linear_algebra_failure_is_a_failed_row(self, monkeypatch):
        def singular_solve(a, b, *args, **kwargs):
            raise numpy.linalg.LinAlgError("Matrix is singular.")

        monkeypatch.setattr(scipy.linalg, "solve", singular_solve)
        records = run_sweep(semilinear_config(schemes=["epirk4s3"]))
        assert len(records) == 2
        for record in records:
            assert record.failed
            assert "denominator is singular" in record.reason
            assert math.isnan(record.error)

    def test_failed_row_does_not_stop_sweep(self):
        records = run_sweep(semilinear_config(schemes=["epirk4s3"],
                h=[0.3, 0.25]))
        assert sweep_failed(records)
        assert records[0].failed
        assert "does not divide" in records[0].reason
        assert math.isnan(records[0].error)
        assert not records[1].failed
        assert math.isfinite(records[1].error)


@pytest.mark.slow
def test_adr_precision_curve(tmp_path):
    config = {"problem": "adr", "scheme": "epirk4s3a", "n": 100,
            "h": [0.01, 0.005, 0.0025, 0.00125], "tol": 1e-12}
    cache = ReferenceCache()
    records = run_sweep(config, cache)
    assert not sweep_failed(records)

    errors = [r.error for r in records]
    assert len(errors) == 4
    for coarse, fine in zip(errors, errors[1:]):
        assert coarse / fine >= 10.0

    paths = [tmp_path / "first.csv", tmp_path / "second.csv"]
    emit_csv(records, str(paths[0]))
    emit_csv(run_sweep(config, cache), str(paths[1]))
    wall = CSV_COLUMNS.index("wall_s")
    first, second = [read_csv(path) for path in paths]
    for a, b in zip(first, second):
        del a[wall]
        del b[wall]
    assert first == second


class TestCsv(object):

    def test_header_and_rows(self, tmp_path):
        records = run_sweep(semilinear_config(schemes=["epirk4s3"]))
        path = tmp_path / "sweep.csv"
        emit_csv(records, str(path))

        rows = read_csv(path)
        assert rows[0] == CSV_COLUMNS
        assert len(rows) == len(records) + 1
        for row, record in zip(rows[1:], records):
            assert row[0] == "semilinear"
            assert row[1] == "epirk4s3"
            assert int(row[2]) == 12
            assert float(row[3]) == record.h
            assert float(row[5]) == record.error
            assert int(row[7]) == record.substeps
            assert float(row[9]) == record.avg_m

    def test_output_is_deterministic(self, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for path in paths:
            emit_csv(run_sweep(semilinear_config()), str(path))
        wall = CSV_COLUMNS.index("wall_s")
        first, second = [read_csv(path) for path in paths]
        for a, b in zip(first, second):
            del a[wall]
            del b[wall]
        assert first == second

    def test_failed_rows_are_written(self, tmp_path):
        record = RunRecord("adr", "epirk4s3", 16, 0.3, 1e-14, failed=True,
                reason="broken")
        path = tmp_path / "failed.csv"
        emit_csv([record], str(path))
        row = read_csv(path)[1]
        assert row[5] == "nan"
        assert row[3] == "0.29999999999999999"

    def test_write_errors(self, tmp_path):
        record = RunRecord("adr", "epirk4s3", 16, 0.1, 1e-14)
        with pytest.raises(RequestError):
            emit_csv([], str(tmp_path / "empty.csv"))
        with pytest.raises(OutputError):
            emit_csv([record], str(tmp_path / "missing" / "out.csv"))

# vim: set smartindent shiftwidth=4 tabstop=4 softtabstop=4 expandtab :

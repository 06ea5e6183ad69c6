import csv
import io
import json
import math
import subprocess
import sys
from pathlib import Path

import pytest

from hydromom.cli import main, table_grid_csv
from hydromom.exact import parse_exact

GOLDEN = Path(__file__).parent / "data" / "table_n6.csv"


def run_cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "hydromom.cli", *argv], capture_output=True, text=True
    )
    return proc.returncode, proc.stdout, proc.stderr


class TestTable:
    def test_golden_file_byte_identical(self):
        code, out, _ = run_cli("table", "--nmax", "6")
        assert code == 0
        assert out.encode() == GOLDEN.read_bytes()

    def test_nmax_one(self):
        code, out, _ = run_cli("table", "--nmax", "1")
        assert code == 0
        assert out == "l/n,1\n0,32/3\n"

    def test_grid_round_trips(self, table_n6):
        text = table_grid_csv(6)
        rows = list(csv.reader(io.StringIO(text)))
        header = rows[0]
        assert header[0] == "l/n"
        for row in rows[1:]:
            l = int(row[0])
            for col, cell in enumerate(row[1:], start=1):
                n = int(header[col])
                if cell == "-":
                    assert l > n - 1
                else:
                    assert parse_exact(cell).coefficient == table_n6[(n, l)]

    def test_extended_grid_self_consistent(self):
        # n = 7, 8 entries go beyond any published grid; the two independent
        # series pin them against each other.
        from hydromom.invp import inv_p_series_compact, inv_p_series_connection

        code, out, _ = run_cli("table", "--nmax", "8")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        for row in rows[1:]:
            l = int(row[0])
            for col, cell in enumerate(row[1:], start=1):
                n = int(rows[0][col])
                if cell == "-" or n <= 6:
                    continue
                value = parse_exact(cell).coefficient
                assert inv_p_series_compact(n, l).times_two_pi().coefficient == value
                assert inv_p_series_connection(n, l).times_two_pi().coefficient == value

    def test_json_and_csv_encode_identical_data(self, table_n6):
        code, out_json, _ = run_cli("table", "--nmax", "4", "--format", "json")
        assert code == 0
        records = json.loads(out_json)
        code, out_csv, _ = run_cli("table", "--nmax", "4", "--float")
        assert code == 0
        csv_rows = list(csv.DictReader(io.StringIO(out_csv)))
        assert len(records) == len(csv_rows) == 10
        for rec, row in zip(records, csv_rows):
            assert str(rec["n"]) == row["n"] and str(rec["l"]) == row["l"]
            assert rec["value_exact"] == row["value_exact"]
            assert parse_exact(rec["value_exact"]).coefficient == table_n6[(rec["n"], rec["l"])]

    def test_float_column_agrees_with_exact(self):
        code, out, _ = run_cli("table", "--nmax", "5", "--float")
        assert code == 0
        for row in csv.DictReader(io.StringIO(out)):
            exact = parse_exact(row["value_exact"]).to_float()
            assert float(row["value_float"]) == pytest.approx(exact, rel=1e-15)


class TestExpect:
    def test_invp_table_units(self):
        code, out, _ = run_cli("expect", "--n", "1", "--l", "0", "--f", "invp")
        assert code == 0
        row = next(csv.DictReader(io.StringIO(out)))
        assert row["value_exact"] == "32/3"
        assert float(row["value_float"]) == pytest.approx(32.0 / 3.0, rel=1e-14)
        assert row["method"] == "closed_form"

    def test_invp_dimensionless(self):
        code, out, _ = run_cli(
            "expect", "--n", "1", "--l", "0", "--f", "invp", "--units", "dimensionless"
        )
        row = next(csv.DictReader(io.StringIO(out)))
        assert row["value_exact"] == "16/3*pi^-1"
        assert float(row["value_float"]) == pytest.approx(1.697653, abs=1e-6)

    def test_normalization_moment(self):
        code, out, _ = run_cli("expect", "--n", "3", "--l", "1", "--f", "one")
        row = next(csv.DictReader(io.StringIO(out)))
        assert float(row["value_float"]) == pytest.approx(1.0, abs=1e-10)

    def test_invp_physical_units(self):
        # <1/P> = (n a/hbar) <hk/P>; float-only (no exact field) with scales.
        code, out, _ = run_cli(
            "expect", "--n", "2", "--l", "1", "--f", "invp",
            "--units", "physical", "--bohr-radius", "2.0", "--hbar", "0.5",
        )
        row = next(csv.DictReader(io.StringIO(out)))
        assert row["value_exact"] == ""
        expected = 2 * 2.0 / 0.5 * 64.0 / (15.0 * math.pi)
        assert float(row["value_float"]) == pytest.approx(expected, rel=1e-12)

    def test_error_estimate_present(self):
        code, out, _ = run_cli("expect", "--n", "2", "--l", "1", "--f", "p2")
        row = next(csv.DictReader(io.StringIO(out)))
        assert float(row["err_estimate"]) < 1e-9

    def test_invalid_state_is_usage_error(self):
        code, _, err = run_cli("expect", "--n", "2", "--l", "5")
        assert code == 2


class TestVerify:
    def test_default_all_pass(self):
        code, out, _ = run_cli("verify", "--nmax", "6")
        assert code == 0
        statuses = [line.split()[0] for line in out.strip().splitlines()]
        assert "FAIL" not in statuses
        assert statuses.count("PASS") >= 7

    def test_known_errata_reported_not_failed(self):
        code, out, _ = run_cli("verify", "--nmax", "4")
        assert code == 0
        assert "KNOWN-ERRATUM alternating-sum-misprint" in out
        assert "2 - 4/(3 pi)" in out
        assert "KNOWN-ERRATUM table-entry-misprint" in out

    def test_injected_error_fails_with_location(self):
        code, out, _ = run_cli("verify", "--nmax", "6", "--inject-error", "5,2")
        assert code == 1
        assert "FAIL dual-series-equivalence" in out
        assert "(n=5, l=2)" in out


class TestAsympt:
    def test_lambda_regime(self):
        code, out, _ = run_cli("asympt", "--regime", "lambda", "--lam", "0.5", "--n-max", "200")
        assert code == 0
        row = next(csv.DictReader(io.StringIO(out)))
        assert float(row["estimate"]) == pytest.approx(1.975, abs=0.01)

    def test_swave_regime(self):
        code, out, _ = run_cli("asympt", "--regime", "swave", "--n", "3")
        row = next(csv.DictReader(io.StringIO(out)))
        assert float(row["estimate"]) == pytest.approx(3.2504, abs=1e-3)
        assert float(row["rel_error"]) < 2e-4

    def test_near_circular_regime(self):
        code, out, _ = run_cli("asympt", "--regime", "near-circular", "--n", "32", "--delta", "1")
        row = next(csv.DictReader(io.StringIO(out)))
        assert float(row["estimate"]) == pytest.approx(1.0 + 9.0 / 128.0, rel=1e-12)


class TestShift:
    def test_zero_coupling(self):
        code, out, _ = run_cli("shift", "--n", "3", "--l", "1", "--b", "0")
        row = next(csv.DictReader(io.StringIO(out)))
        assert float(row["energy_shift"]) == 0.0

    def test_ground_state(self):
        code, out, _ = run_cli("shift", "--n", "1", "--l", "0", "--b", "1e-6")
        row = next(csv.DictReader(io.StringIO(out)))
        assert float(row["energy_shift"]) == pytest.approx(-16e-6 / (3 * math.pi), rel=1e-12)
        assert float(row["inv_p"]) == pytest.approx(16.0 / (3 * math.pi), rel=1e-12)


class TestWavefn:
    def test_momentum_sampling(self):
        code, out, _ = run_cli("wavefn", "--n", "1", "--l", "0", "--points", "5", "--max", "4")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 5
        kap = 1.0
        k = float(rows[2]["grid_value"])
        expected = 16.0 * math.pi / (k * k + kap * kap) ** 2
        assert float(rows[2]["amplitude"]) == pytest.approx(expected, rel=1e-12)

    def test_position_sampling(self):
        code, out, _ = run_cli(
            "wavefn", "--n", "1", "--l", "0", "--space", "position", "--points", "3", "--max", "2"
        )
        rows = list(csv.DictReader(io.StringIO(out)))
        r = float(rows[1]["grid_value"])
        assert float(rows[1]["amplitude"]) == pytest.approx(2.0 * math.exp(-r), rel=1e-12)

    def test_log_grid(self):
        code, out, _ = run_cli(
            "wavefn", "--n", "2", "--l", "1", "--grid", "log", "--min", "0.01", "--max", "10", "--points", "7"
        )
        rows = list(csv.DictReader(io.StringIO(out)))
        grid = [float(r["grid_value"]) for r in rows]
        ratios = [b / a for a, b in zip(grid, grid[1:])]
        assert all(r == pytest.approx(ratios[0], rel=1e-9) for r in ratios)


class TestInProcessMain:
    def test_main_returns_exit_code(self, capsys):
        assert main(["table", "--nmax", "2"]) == 0
        out = capsys.readouterr().out
        assert "256/15" in out

    def test_usage_error_from_bad_value(self, capsys):
        assert main(["expect", "--n", "0", "--l", "0"]) == 2

    def test_non_convergence_exit_code(self, monkeypatch, capsys):
        import hydromom.cli as cli
        from hydromom.quadrature import ConvergenceError

        def blow_up(*args, **kwargs):
            raise ConvergenceError("simulated stall", 0.1)

        monkeypatch.setattr(cli, "lambda_limit", blow_up)
        assert main(["asympt", "--regime", "lambda", "--lam", "0.5"]) == 3
        assert "non-convergence" in capsys.readouterr().err

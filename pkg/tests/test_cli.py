"""CLI surface: subcommands, formats, exit codes, determinism."""

import csv
import io
import json
import math
import subprocess
import sys

import pytest

from seiffert_bounds.cli import main

LAMBDA_REF = 0.9526915711070529


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_arithmetic(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "arithmetic", "1", "3")
        assert code == 0
        assert float(out) == 2.0

    def test_seiffert(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "seiffert", "1", "3")
        assert code == 0
        assert float(out) == pytest.approx(2.15681043229161, rel=1e-15)

    def test_blend(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "blend", "1", "3", "--x", "0.75")
        assert code == 0
        assert float(out) == pytest.approx(49 / 24, rel=1e-14)

    def test_power(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "power", "1", "3", "--p", "2")
        assert code == 0
        assert float(out) == pytest.approx(math.sqrt(5), rel=1e-14)

    def test_power_without_exponent_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "eval", "power", "1", "3")
        assert code == 2
        assert "error" in err

    def test_domain_error_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "eval", "seiffert", "-1", "3")
        assert code == 2
        assert "positive" in err

    def test_blend_domain_error(self, capsys):
        code, _, _ = run_cli(capsys, "eval", "blend", "1", "3", "--x", "0.2")
        assert code == 2

    def test_oracle_mode(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "seiffert", "1", "3", "--oracle", "--precision", "30"
        )
        assert code == 0
        assert out.strip().startswith("2.156810432291609984")


class TestVerify:
    def test_thm2_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "thm2", "--samples", "100000", "--format", "json"
        )
        assert code == 0
        rep = json.loads(out)
        assert rep["schema"] == 1
        (suite,) = rep["suites"]
        assert suite["suite"] == "thm2" and suite["pass"] is True
        assert abs(suite["inf"] - (4 / math.pi - 1)) < 1e-5
        assert abs(suite["sup"] - 1 / 3) < 1e-5
        assert suite["witness"] is None

    def test_thm1_alpha_shift_fails(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "thm1", "--samples", "5000", "--alpha-shift", "1e-4",
            "--format", "json",
        )
        assert code == 1
        (suite,) = json.loads(out)["suites"]
        assert suite["pass"] is False
        assert suite["witness"]["ratio"] > 1.0

    def test_chain(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "chain", "--samples", "5000")
        assert code == 0
        assert "suite chain: PASS" in out

    def test_all(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "all", "--samples", "5000", "--format", "json"
        )
        assert code == 0
        rep = json.loads(out)
        assert [s["suite"] for s in rep["suites"]] == ["chain", "priors", "thm1", "thm2"]
        assert all(s["pass"] for s in rep["suites"])

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "thm1", "--samples", "2000", "--format", "csv"
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert rows[0]["name"] == "thm1"
        assert set(rows[0]) == {"name", "closed_form", "discovered", "gap", "witness_ratio", "slack"}

    def test_bad_samples_exit_2(self, capsys):
        code, _, _ = run_cli(capsys, "verify", "thm1", "--samples", "0")
        assert code == 2

    def test_deterministic_reports(self, capsys):
        _, out1, _ = run_cli(capsys, "verify", "thm1", "--samples", "3000", "--seed", "7", "--format", "json")
        _, out2, _ = run_cli(capsys, "verify", "thm1", "--samples", "3000", "--seed", "7", "--format", "json")
        assert out1 == out2


class TestConstants:
    def test_plain(self, capsys):
        code, out, _ = run_cli(capsys, "constants")
        assert code == 0
        assert "blend_alpha" in out and "ratio_beta" in out

    def test_json_lines(self, capsys):
        code, out, _ = run_cli(capsys, "constants", "--format", "json")
        assert code == 0
        recs = [json.loads(line) for line in out.strip().splitlines()]
        assert len(recs) == 4
        by_name = {r["name"]: r for r in recs}
        assert by_name["blend_alpha"]["gap"] < 1e-12
        assert by_name["ratio_alpha"]["closed_form"] == pytest.approx(4 / math.pi - 1, rel=1e-15)
        assert by_name["ratio_beta"]["closed_form"] == pytest.approx(1 / 3, rel=1e-15)
        assert all(r["schema"] == 1 for r in recs)
        assert all(r["gap"] <= 1e-10 for r in recs)

    def test_csv(self, capsys):
        code, out, _ = run_cli(capsys, "constants", "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["name"] for r in rows] == ["blend_alpha", "blend_beta", "ratio_alpha", "ratio_beta"]


class TestSeries:
    def test_bernoulli_rows(self, capsys):
        code, out, _ = run_cli(capsys, "series", "bernoulli", "--order", "3")
        assert code == 0
        assert "n=1: 1/6" in out and "n=2: -1/30" in out and "n=3: 1/42" in out

    def test_ratio_leading_row(self, capsys):
        code, out, _ = run_cli(capsys, "series", "ratio", "--order", "2")
        assert code == 0
        assert "n=1: -2/3" in out

    def test_order_range_error(self, capsys):
        code, _, err = run_cli(capsys, "series", "cot", "--order", "61")
        assert code == 2
        assert "order" in err

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "series", "csc2", "--order", "5", "--format", "json")
        assert code == 0
        rep = json.loads(out)
        assert rep["schema"] == 1 and len(rep["terms"]) == 5
        assert rep["terms"][0] == {"n": 1, "coefficient": "1/3"}
        assert rep["tail_bound"] > 0.0


class TestCertify:
    def test_json_report(self, capsys):
        code, out, _ = run_cli(capsys, "certify", "--format", "json")
        assert code == 0
        rep = json.loads(out)
        assert rep["pass"] is True
        pts = rep["critical_points"]
        assert 1.0 < pts["t0"] < pts["t1"] < pts["t2"] < pts["t3"]
        assert rep["gap_negative_on_grid"] is True
        assert abs(rep["gap_at_1e8"]) < 1e-6


def test_console_script_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "seiffert_bounds.cli", "eval", "arithmetic", "1", "3"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    assert float(out.stdout) == 2.0

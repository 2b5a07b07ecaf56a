import io
import json
import math
import subprocess
import sys

import pytest

from lgw.cli import run

OMEGA = 0.5671432904097838


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    assert out.endswith("\n")
    return code, json.loads(out)


class TestWCommand:
    def test_omega_example(self, capsys):
        code, obj = run_json(capsys, ["w", "--branch", "0", "--re", "1", "--im", "0"])
        assert code == 0
        assert obj["re"] == pytest.approx(OMEGA, abs=1e-12)
        assert obj["im"] == 0.0
        assert obj["residual"] <= 1e-10
        assert obj["conventions"]["branch"] == 0
        assert obj["conventions"]["tolerance"] == 1e-10

    def test_nonzero_branch(self, capsys):
        code, obj = run_json(capsys, ["w", "--branch", "-1", "--re", "-0.1"])
        assert code == 0
        assert obj["re"] == pytest.approx(-3.577152063957297, abs=1e-12)

    def test_scientific_notation_accepted(self, capsys):
        code, obj = run_json(capsys, ["w", "--re", "1e-3"])
        assert code == 0
        assert obj["re"] == pytest.approx(9.990014975021977e-4, rel=1e-9)

    def test_domain_error_exit_2(self, capsys):
        assert run(["w", "--re", "0", "--branch", "3"]) == 2
        err = capsys.readouterr().err
        assert "diverges" in err

    def test_tight_tolerance_exit_3(self, capsys):
        # W(-1/e) carries sqrt-conditioned residual; 1e-15 cannot be met there
        code = run(["w", "--re", str(-1 / math.e), "--tolerance", "1e-15"])
        assert code in (0, 3)  # depends on rounding of -1/e; either is honest
        code = run(["w", "--re", "0.5", "--tolerance", "1e-15"])
        assert code == 0


class TestUsageErrors:
    def test_unknown_command(self, capsys):
        assert run(["frobnicate"]) == 64
        assert "usage" in capsys.readouterr().err.lower()

    def test_missing_required(self, capsys):
        assert run(["w"]) == 64

    def test_bad_tolerance_range(self, capsys):
        assert run(["w", "--re", "1", "--tolerance", "0.5"]) == 64
        assert run(["w", "--re", "1", "--tolerance", "1e-20"]) == 64

    def test_scan_needs_exactly_one_mode(self, capsys):
        assert run(["scan", "--limit", "10"]) == 64
        assert run(["scan", "--imaginary", "--real", "--limit", "10"]) == 64


class TestSolveCommand:
    def test_exp_fixed_point(self, capsys):
        code, obj = run_json(
            capsys, ["solve", "--a-re", "0", "--b-re", "1", "--c-re", "-1"]
        )
        assert code == 0
        assert obj["re"] == pytest.approx(OMEGA, abs=1e-12)

    def test_degenerate_exit_2(self, capsys):
        assert run(["solve", "--a-re", "0", "--b-re", "1", "--c-re", "0"]) == 2


class TestAlphaCommand:
    def test_real_case_from_radicand(self, capsys):
        code, obj = run_json(capsys, ["alpha", "--case", "real", "--d", "5"])
        assert code == 0
        assert obj["alpha_im"] == 0.0
        assert obj["residual_split_1"] <= 1e-10
        assert obj["residual_sum_equation"] is not None

    def test_complex_case(self, capsys):
        code, obj = run_json(
            capsys, ["alpha", "--case", "complex", "--eps-re", "0", "--eps-im", "1"]
        )
        assert code == 0
        assert obj["residual_defining"] <= 1e-10

    def test_synthetic_log(self, capsys):
        code, obj = run_json(
            capsys,
            ["alpha", "--case", "complex", "--log-eps-re", str(-math.e / (2 * math.pi))],
        )
        assert code == 0
        assert obj["alpha_im"] == pytest.approx(1 / (2 * math.pi), abs=1e-14)
        assert obj["alpha_re"] == pytest.approx(0.0, abs=1e-14)

    def test_unit_one_exit_2(self, capsys):
        assert run(["alpha", "--case", "complex", "--eps-re", "1"]) == 2


class TestUnitCommand:
    def test_d94(self, capsys):
        code, obj = run_json(capsys, ["unit", "--d", "94"])
        assert code == 0
        assert (obj["x"], obj["y"], obj["norm"]) == (2143295, 221064, 1)
        assert obj["half_integral"] is False

    def test_not_squarefree_exit_2(self, capsys):
        assert run(["unit", "--d", "12"]) == 2


class TestClassnoCommand:
    def test_heegner_example(self, capsys):
        code, obj = run_json(capsys, ["classno", "--discriminant", "-163"])
        assert code == 0
        assert obj["D"] == -163
        assert obj["h"] == 1

    def test_by_radicand(self, capsys):
        code, obj = run_json(capsys, ["classno", "--d", "10"])
        assert code == 0
        assert obj["D"] == 40
        assert obj["h"] == 2

    def test_narrow_flag(self, capsys):
        code, obj = run_json(capsys, ["classno", "--discriminant", "12", "--narrow"])
        assert code == 0
        assert obj["h"] == 1
        assert obj["h_narrow"] == 2

    def test_mutually_exclusive(self, capsys):
        assert run(["classno", "--discriminant", "5", "--d", "5"]) == 64

    def test_not_fundamental_exit_2(self, capsys):
        assert run(["classno", "--discriminant", "-12"]) == 2


class TestScanCommand:
    def test_empty_real_csv(self, capsys):
        code = run(["scan", "--real", "--limit", "4", "--format", "csv"])
        out = capsys.readouterr().out
        assert code == 0
        assert out.strip() == (
            "D,d,h,unit,norm,regulator,alpha_re,alpha_im,residual_defining,"
            "residual_split_1,residual_split_2,residual_sum_equation,branch,log_branch"
        )

    def test_imaginary_json(self, capsys):
        code, obj = run_json(capsys, ["scan", "--imaginary", "--limit", "200"])
        assert code == 0
        assert obj["count_h1"] == 9
        assert obj["distinct_unit_count"] == 8
        h1 = sorted({r["D"] for r in obj["rows"] if r["h"] == 1})
        assert h1 == [-163, -67, -43, -19, -11, -8, -7, -4, -3]

    def test_jobs_flag_deterministic(self, capsys):
        code = run(["scan", "--real", "--limit", "120", "--jobs", "1"])
        out1 = capsys.readouterr().out
        code2 = run(["scan", "--real", "--limit", "120", "--jobs", "2"])
        out2 = capsys.readouterr().out
        assert code == code2 == 0
        assert out1 == out2

    def test_env_jobs_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("LGW_JOBS", "2")
        code = run(["scan", "--real", "--limit", "40"])
        assert code == 0
        out_env = capsys.readouterr().out
        monkeypatch.delenv("LGW_JOBS")
        run(["scan", "--real", "--limit", "40"])
        assert capsys.readouterr().out == out_env


class TestVerifyCommand:
    def test_real_example(self, capsys):
        code, obj = run_json(
            capsys,
            ["verify", "--case", "real", "--alpha-re", "0", "--log-eps-re", "1"],
        )
        assert code == 0
        assert obj["residual"] == 1.0

    def test_tolerance_check(self, capsys):
        code = run(
            ["verify", "--case", "real", "--alpha-re", "0", "--log-eps-re", "1",
             "--tolerance", "1e-6"]
        )
        assert code == 3


class TestTableCommand:
    def test_from_scan_json(self, capsys, monkeypatch):
        run(["scan", "--imaginary", "--limit", "200"])
        scan_out = capsys.readouterr().out
        monkeypatch.setattr("sys.stdin", io.StringIO(scan_out))
        code, obj = run_json(capsys, ["table"])
        assert code == 0
        assert obj["n_alpha"] == 15
        assert obj["distinct_alpha_count"] == 7
        assert obj["min_alpha_separation"] > 1e-3
        assert len(obj["entries"]) == 15

    def test_from_file(self, capsys, tmp_path):
        run(["scan", "--real", "--limit", "10"])
        scan_out = capsys.readouterr().out
        p = tmp_path / "scan.json"
        p.write_text(scan_out)
        code, obj = run_json(capsys, ["table", "--input", str(p)])
        assert code == 0
        assert {e["D"] for e in obj["entries"]} == {5, 8}


class TestGoldenOutput:
    """Byte-exact pins of the JSON/CSV schemas."""

    def test_w_golden(self, capsys):
        run(["w", "--re", "1"])
        assert capsys.readouterr().out == (
            '{"re": 0.5671432904097838, "im": 0.0, "residual": 0.0, "branch": 0, '
            '"iterations": 3, "conventions": {"branch": 0, "log_branch": 0, '
            '"pairing": "conjugate-branch", "tolerance": 1e-10}}\n'
        )

    def test_classno_golden(self, capsys):
        run(["classno", "--discriminant", "-163"])
        assert capsys.readouterr().out == (
            '{"D": -163, "h": 1, "d": -163, "conventions": {"branch": 0, '
            '"log_branch": 0, "pairing": "conjugate-branch", "tolerance": 1e-10}}\n'
        )

    def test_unit_golden(self, capsys):
        run(["unit", "--d", "5"])
        assert capsys.readouterr().out == (
            '{"d": 5, "x": 1, "y": 1, "half_integral": true, "norm": -1, '
            '"regulator": 0.48121182505960347, "unit": "(1+1*sqrt(5))/2", '
            '"conventions": {"branch": 0, "log_branch": 0, '
            '"pairing": "conjugate-branch", "tolerance": 1e-10}}\n'
        )

    def test_scan_csv_golden_first_rows(self, capsys):
        run(["scan", "--real", "--limit", "30", "--format", "csv"])
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == (
            "D,d,h,unit,norm,regulator,alpha_re,alpha_im,residual_defining,"
            "residual_split_1,residual_split_2,residual_sum_equation,branch,log_branch"
        )
        assert lines[1] == (
            "5,5,1,(1+1*sqrt(5))/2,-1,0.48121182505960347,0.263707115569417,0.0,"
            "0.3050999542980663,0.0,0.0,0.6101999085961326,0,0"
        )
        assert lines[2] == (
            "8,2,1,1+1*sqrt(2),-1,0.8813735870195432,0.2971608923118461,0.0,"
            "0.554524776912384,3.925231146709438e-17,3.925231146709438e-17,"
            "1.109049553824768,0,0"
        )


class TestSubprocess:
    def test_module_entry_point(self):
        res = subprocess.run(
            [sys.executable, "-m", "lgw", "classno", "--discriminant", "-163"],
            capture_output=True,
            text=True,
        )
        assert res.returncode == 0
        obj = json.loads(res.stdout)
        assert (obj["D"], obj["h"]) == (-163, 1)
        assert res.stderr == ""

    def test_stderr_carries_diagnostics_only(self):
        res = subprocess.run(
            [sys.executable, "-m", "lgw", "unit", "--d", "12"],
            capture_output=True,
            text=True,
        )
        assert res.returncode == 2
        assert res.stdout == ""
        assert "square factor" in res.stderr

    def test_downstream_pipe_close_is_quiet(self):
        # a consumer that stops reading (head-style) must not provoke a traceback
        res = subprocess.run(
            f"{sys.executable} -m lgw scan --imaginary --limit 3000 --format csv | head -2",
            shell=True,
            capture_output=True,
            text=True,
        )
        assert res.returncode == 0  # head's status
        assert "Traceback" not in res.stderr
        assert res.stdout.startswith("D,d,h,unit")

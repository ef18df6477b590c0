"""Command-line interface: dispatch, formats, problem files, exit codes."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from wirecut.cli import main

PROBLEMS = Path(__file__).resolve().parents[1] / "problems"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_min_table(capsys):
    code, out, _ = run(capsys, "min", "--length", "12", "--shapes", "4,3")
    assert code == 0
    assert "5.220" in out and "6.780" in out and "3.915" in out
    assert "interior-minimum" in out


def test_max_table(capsys):
    code, out, _ = run(capsys, "max", "--length", "12", "--shapes", "4,3")
    assert code == 0
    assert "vertex-maximum" in out
    assert "9.000" in out


def test_max_paper_face_flag(capsys):
    code, out, _ = run(
        capsys, "max", "--length", "10", "--shapes", "4,3,circle", "--paper-face-max"
    )
    assert code == 0
    assert "face-stationary" in out
    assert "3.501" in out


def test_bounds_table_shows_roots_and_clipped_interval(capsys):
    code, out, _ = run(
        capsys,
        "bounds",
        "--length", "20",
        "--shapes", "3,4,6,8,12,circle",
        "--area", "23",
        "--sense", "upper",
    )
    assert code == 0
    assert "0.609, 6.235" in out
    assert "(0.609, 4.000)" in out


def test_allocate_table(capsys):
    code, out, _ = run(capsys, "allocate", "--lengths", "1,1", "--budget", "8")
    assert code == 0
    lines = [line for line in out.splitlines() if line.strip().startswith(("0", "1"))]
    assert all(" 4 " in line for line in lines)


def test_min_json_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "min", "--length", "12", "--shapes", "4,3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    problem_file = tmp_path / "echo.json"
    problem_file.write_text(json.dumps(payload["problem"]))
    code, out, _ = run(capsys, "min", "--file", str(problem_file), "--format", "json")
    assert code == 0
    assert json.loads(out) == payload


def test_bounds_json_round_trip(capsys, tmp_path):
    code, out, _ = run(
        capsys,
        "bounds",
        "--length", "10",
        "--shapes", "4,3,circle",
        "--area", "5",
        "--sense", "lower",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["intervals"] == [pytest.approx([0.0, 1.089], abs=2e-3)]
    problem_file = tmp_path / "echo.json"
    problem_file.write_text(json.dumps(payload["problem"]))
    code, out, _ = run(capsys, "bounds", "--file", str(problem_file), "--format", "json")
    assert code == 0
    assert json.loads(out) == payload


def test_allocate_json_round_trip(capsys, tmp_path):
    code, out, _ = run(
        capsys, "allocate", "--lengths", "1,2", "--budget", "9", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["sides"] == [4, 5]
    problem_file = tmp_path / "echo.json"
    problem_file.write_text(json.dumps(payload["problem"]))
    code, out, _ = run(capsys, "allocate", "--file", str(problem_file), "--format", "json")
    assert code == 0
    assert json.loads(out) == payload


def test_flags_override_file(capsys, tmp_path):
    problem_file = tmp_path / "p.json"
    problem_file.write_text(json.dumps({"mode": "partition", "length": 12, "shapes": [4, 3]}))
    code, out, _ = run(
        capsys, "min", "--file", str(problem_file), "--length", "24", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["problem"]["length"] == 24.0


@pytest.mark.parametrize("name", [
    "partition_square_triangle.json",
    "partition_six_shapes.json",
    "bounds_three_shapes.json",
    "allocation_two_wires.json",
])
def test_verify_shipped_problem_files(capsys, name):
    code, out, _ = run(capsys, "verify", "--file", str(PROBLEMS / name))
    assert code == 0
    assert "verification passed" in out


def test_verify_json_reports_checks(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--file", str(PROBLEMS / "partition_square_triangle.json"),
        "--resolution", "500",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert all(check["ok"] for check in payload["checks"])


def test_invalid_length_exits_2(capsys):
    code, _, err = run(capsys, "min", "--length", "-3", "--shapes", "4,3")
    assert code == 2
    assert "error:" in err


def test_bad_shape_exits_2(capsys):
    code, _, err = run(capsys, "min", "--length", "5", "--shapes", "4,2")
    assert code == 2
    assert "error:" in err


def test_missing_field_exits_2(capsys):
    code, _, err = run(capsys, "bounds", "--length", "5", "--shapes", "4,3")
    assert code == 2
    assert "--area" in err


def test_mode_mismatch_exits_2(capsys, tmp_path):
    problem_file = tmp_path / "p.json"
    problem_file.write_text(json.dumps({"mode": "allocation", "lengths": [1, 2], "side_budget": 9}))
    code, _, err = run(capsys, "min", "--file", str(problem_file))
    assert code == 2
    assert "mode" in err


def test_infeasible_budget_exits_3(capsys):
    code, _, err = run(capsys, "allocate", "--lengths", "1,1", "--budget", "5")
    assert code == 3
    assert "3 sides" in err


def test_resource_guard_exits_4(capsys):
    code, _, err = run(
        capsys, "allocate", "--lengths", ",".join(["1"] * 12), "--budget", "200"
    )
    assert code == 4
    assert "limit" in err


def test_malformed_json_exits_2(capsys, tmp_path):
    problem_file = tmp_path / "broken.json"
    problem_file.write_text("{not json")
    code, _, err = run(capsys, "min", "--file", str(problem_file))
    assert code == 2


def test_console_script_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "wirecut.cli", "min", "--length", "12", "--shapes", "4,3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert result.returncode == 0
    assert "3.915" in result.stdout

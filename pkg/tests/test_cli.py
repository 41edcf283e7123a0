"""End-to-end CLI runs against checked-in expected outputs.

Set LEECHGDH_REGEN=1 to rewrite the fixtures after an intended change.
"""
from __future__ import annotations

import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

from leechgdh import cli

FIX = Path(__file__).parent / "fixtures"
HALF_K = str(FIX / "half_k.json")
A1_CENTRE = ",".join(f"{h}/92" if h else "0" for h in (0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 24))

CASES = [
    ("coeffs_46.txt", ["coeffs", "46"]),
    ("coeffs_46.json", ["coeffs", "46", "--format", "json"]),
    ("vacuum_6_4.txt", ["vacuum", "6^4"]),
    ("bound_1_8_2_8.csv", ["bound", "1^8 2^8", "30", "--format", "csv"]),
    ("trace_count.txt", ["trace-solutions", "--count-only"]),
    ("trace_solutions.csv", ["trace-solutions", "--format", "csv"]),
    ("candidates.csv", ["candidates", "--format", "csv"]),
    ("candidates_spurious.txt", ["candidates", "--spurious-only"]),
    ("d12_a1_6.json", ["d12-search", "A_1^6", "--format", "json"]),
    ("d12_a1_4.txt", ["d12-search", "A_1^4"]),
    ("hole_a1.txt", ["hole-diagram", "--lattice", HALF_K, "--centre", A1_CENTRE, "--rho", "3/4",
                     "--expected", "A_1"]),
    ("complete_a1.csv", ["complete", "--seed", "A~1", "--format", "csv"]),
    ("tables_verify.txt", ["tables", "--verify"]),
    ("tables_arith.json", ["tables", "--no-geometry", "--format", "json"]),
]


def run(argv, capsys) -> tuple[int, str, str]:
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name,argv", CASES, ids=[c[0] for c in CASES])
def test_fixture(name, argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    path = FIX / "cli" / name
    if os.environ.get("LEECHGDH_REGEN"):
        path.write_text(out, encoding="utf-8")
    assert out == path.read_text(encoding="utf-8")


def test_output_file_matches_stdout(tmp_path, capsys):
    target = tmp_path / "out.json"
    assert cli.main(["coeffs", "46", "--format", "json", "--output", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert target.read_text() == (FIX / "cli" / "coeffs_46.json").read_text()
    assert json.loads(target.read_text())["coefficients"]["46"] == "1"


def test_jobs_do_not_change_output(capsys):
    _, one, _ = run(["d12-search", "A_1^3", "--format", "json"], capsys)
    _, two, _ = run(["d12-search", "A_1^3", "--format", "json", "--jobs", "2"], capsys)
    assert one == two and json.loads(one)["surviving_orbits"] == [[0, 0, 0, 2, 2, 2, 4, 4, 4, 6, 6, 8]]


@pytest.mark.parametrize("argv", [
    [],
    ["nonsense"],
    ["coeffs"],
    ["coeffs", "0"],
    ["vacuum", "2^11"],
    ["bound", "2^12", "3"],
    ["d12-search", "A_2"],
    ["d12-search", "Q_7"],
    ["complete", "--seed", "A~4"],
    ["hole-diagram", "--lattice", HALF_K, "--centre", "0.5,0", "--rho", "3/4"],
    ["hole-diagram", "--lattice", HALF_K, "--centre", "1/2,0", "--rho", "3/4"],
    ["hole-diagram", "--lattice", HALF_K, "--centre", A1_CENTRE, "--rho", "0.75"],
    ["coeffs", "46", "--jobs", "0"],
])
def test_usage_errors(argv, capsys):
    assert run(argv, capsys)[0] == cli.EXIT_USAGE


def test_data_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["tables", "--verify", "--golden", str(bad)], capsys)[0] == cli.EXIT_DATA
    assert run(["hole-diagram", "--lattice", str(bad), "--centre", "0", "--rho", "0"], capsys)[0] == cli.EXIT_DATA
    assert run(["hole-diagram", "--lattice", str(tmp_path / "none.json"), "--centre", "0", "--rho", "0"],
               capsys)[0] == cli.EXIT_DATA


def test_golden_diff_exit(tmp_path, capsys):
    obj = json.loads((cli.classify.data_dir() / "golden_holes.json").read_text())
    obj["rows"][5]["n"] += 1
    path = tmp_path / "golden.json"
    path.write_text(json.dumps(obj))
    code, out, _ = run(["tables", "--verify", "--no-geometry", "--golden", str(path)], capsys)
    assert code == cli.EXIT_DIFF
    assert out.splitlines() == ["A6: n 18 != 19", "A6: weight list length", "70 rows verified, 2 diffs"]


def test_failed_check_exit(capsys):
    code, _, err = run(["hole-diagram", "--lattice", HALF_K, "--centre", ",".join(["0"] * 12), "--rho", "3/4"],
                       capsys)
    assert code == cli.EXIT_DIFF and "closer vector exists" in err


def test_seed_check_flag(capsys):
    code, out, _ = run(["coeffs", "6", "--seed-check"], capsys)
    assert code == 0 and out.strip() == "{1: 12, 2: -4, 3: -3, 6: 1}"


def test_parse_rational():
    assert cli.parse_rational("-3/4") == Fraction(-3, 4)
    with pytest.raises(cli.UsageError):
        cli.parse_rational("1e3")
    with pytest.raises(cli.UsageError):
        cli.parse_vector("1,,2")

import json
import subprocess
import sys

import pytest

from plfg.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog_list(capsys):
    code, out, _ = run_cli(capsys, "catalog", "list", "--prime", "13")
    assert code == 0
    assert "M13" in out and "E13_3X4S4" in out and "J4" not in out


def test_verify_single_group(capsys):
    code, out, _ = run_cli(capsys, "verify", "--group", "J4")
    assert code == 0
    assert "J4" in out and "ok" in out


def test_unknown_group_exit_code(capsys):
    code, _, err = run_cli(capsys, "cohomology", "--group", "UNKNOWN")
    assert code == 2
    assert "unknown group" in err


def test_odd_max_degree_rejected(capsys):
    code, _, err = run_cli(capsys, "cohomology", "--group", "J4",
                           "--max-degree", "7")
    assert code == 2


def test_splitting_wedge(capsys):
    code, out, _ = run_cli(capsys, "splitting", "--group", "M13")
    assert code == 0
    assert out.strip() == \
        "M13: X(0,0) v X(6,3) v X(8,8) v X(12,0) v X(12,6) v M(2)"


def test_json_output_round_trips_and_is_deterministic(capsys):
    code, out1, _ = run_cli(capsys, "cohomology", "--group", "M24",
                            "--max-degree", "40", "--format", "json")
    assert code == 0
    code, out2, _ = run_cli(capsys, "cohomology", "--group", "M24",
                            "--max-degree", "40", "--format", "json")
    assert out1 == out2
    payload = json.loads(out1)
    assert json.loads(json.dumps(payload)) == payload
    assert payload["dims"][0] == 1 and payload["dims"][2] == 1


def test_splitting_json_schema(capsys):
    code, out, _ = run_cli(capsys, "splitting", "--group", "ON",
                           "--format", "json")
    payload = json.loads(out)
    assert payload["dominant"] == [[0, 0, 1], [2, 2, 1], [4, 1, 1], [4, 4, 2],
                                   [6, 0, 2], [6, 3, 1]]
    assert payload["l2"] == [[0, 1], [2, 1], [4, 1]]
    assert payload["l1"] == [[0, 1]]


def test_invariants_subcommand(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--prime", "7", "--group",
                           "3SD32", "--algebra", "BE", "--max-degree", "64",
                           "--format", "csv")
    assert code == 0
    rows = dict(line.split(",") for line in out.strip().splitlines()[1:])
    assert rows["0"] == "1" and rows["44"] == "1" and rows["64"] == "1"
    assert rows["24"] == "1" and rows["2"] == "0"


def test_invariants_unknown_name(capsys):
    code, _, err = run_cli(capsys, "invariants", "--prime", "7",
                           "--group", "XX", "--algebra", "BE")
    assert code == 2


def test_cohomology_csv_with_odd(capsys):
    code, out, _ = run_cli(capsys, "cohomology", "--group", "2F4",
                           "--max-degree", "20", "--odd", "--format", "csv")
    assert code == 0
    assert "odd:11,1" in out


def test_entry_point_installed():
    proc = subprocess.run([sys.executable, "-m", "plfg.cli", "catalog", "list"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "M13" in proc.stdout


def test_odd_max_degree_allowed_with_odd_flag(capsys):
    code, out, _ = run_cli(capsys, "cohomology", "--group", "2F4",
                           "--max-degree", "27", "--odd", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["degrees"][-1] == 26
    assert payload["odd"]["11"] == 1 and payload["odd"]["27"] == 2


def test_verify_mismatch_exit_code(tmp_path, monkeypatch, capsys):
    from pathlib import Path

    src = Path(__file__).parent.parent / "src" / "plfg" / "data" / "J4.json"
    doc = json.loads(src.read_text())
    doc["expectations"]["splitting"]["dominant"] = [[0, 0, 2]]
    (tmp_path / "J4.json").write_text(json.dumps(doc))
    monkeypatch.setenv("PLFG_CATALOG_DIR", str(tmp_path))
    code, out, _ = run_cli(capsys, "verify", "--all")
    assert code == 1
    assert "FAIL" in out

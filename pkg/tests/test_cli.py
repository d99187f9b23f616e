"""Command line harness: exit statuses, determinism, dump formats."""

import json
import subprocess
import sys

import pytest

from heckecell.cli import main, parse_partition, parse_range


def run_cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "heckecell", *argv],
        capture_output=True, text=True)
    return proc


def test_parse_range():
    assert parse_range("4") == [4]
    assert parse_range("2..5") == [2, 3, 4, 5]
    with pytest.raises(ValueError):
        parse_range("5..2")


def test_parse_partition():
    assert parse_partition("3,2,1") == (3, 2, 1)
    with pytest.raises(ValueError):
        parse_partition("1,2")


def test_list_checks():
    proc = run_cli("list-checks")
    assert proc.returncode == 0
    names = proc.stdout.split()
    assert "restriction-filtration" in names
    assert "quadratic-relation" in names
    assert len(names) == 15


def test_unknown_check_exits_2():
    proc = run_cli("verify", "unknown-name")
    assert proc.returncode == 2


def test_bad_range_exits_2():
    proc = run_cli("verify", "quadratic-relation", "--n", "5..2")
    assert proc.returncode == 2


def test_quadratic_check_passes():
    proc = run_cli("verify", "quadratic-relation", "--n", "2..4")
    assert proc.returncode == 0
    lines = [json.loads(line) for line in proc.stdout.splitlines()]
    assert all(rec["verdict"] == "pass" for rec in lines)


def test_restriction_filtration_n3_report():
    proc = run_cli("verify", "restriction-filtration", "--n", "3")
    assert proc.returncode == 0
    lines = [json.loads(line) for line in proc.stdout.splitlines()]
    assert len(lines) == 3
    assert sum(len(rec["layers"]) for rec in lines) == 4


def test_determinism_byte_identical():
    a = run_cli("verify", "restriction-filtration", "--n", "4")
    b = run_cli("verify", "restriction-filtration", "--n", "4")
    assert a.returncode == 0 and b.returncode == 0
    assert a.stdout == b.stdout


def test_exit_1_on_verification_failure(monkeypatch, capsys):
    # exit-status contract is testable without a genuine mathematical failure
    from heckecell import cli

    def fake_check(args):
        yield {"check": "fake", "n": 2, "item": "x", "verdict": "fail",
               "witness": {"reason": "synthetic"}}

    monkeypatch.setitem(cli.CHECKS, "quadratic-relation", fake_check)
    status = main(["verify", "quadratic-relation", "--n", "2"])
    assert status == 1
    out = capsys.readouterr().out
    assert json.loads(out.splitlines()[0])["verdict"] == "fail"


def test_table_format():
    proc = run_cli("verify", "order-preserving", "--n", "3", "--format", "table")
    assert proc.returncode == 0
    assert "order-preserving" in proc.stdout
    assert "verdict" in proc.stdout


def test_out_file(tmp_path):
    target = tmp_path / "report.jsonl"
    proc = run_cli("verify", "order-preserving", "--n", "3", "--out", str(target))
    assert proc.returncode == 0
    lines = [json.loads(line) for line in target.read_text().splitlines()]
    assert all(rec["verdict"] == "pass" for rec in lines)


def test_jobs_flag_matches_serial():
    serial = run_cli("verify", "restriction-filtration", "--n", "4")
    parallel = run_cli("verify", "restriction-filtration", "--n", "4", "--jobs", "2")
    assert serial.stdout == parallel.stdout


def test_dump_tableaux():
    proc = run_cli("dump", "tableaux", "--lambda", "2,2")
    assert proc.returncode == 0
    lines = [json.loads(line) for line in proc.stdout.splitlines()]
    assert [rec["tableau"] for rec in lines] == [[[1, 2], [3, 4]], [[1, 3], [2, 4]]]


def test_dump_murphy_basis_n2():
    proc = run_cli("dump", "murphy-basis", "--n", "2")
    assert proc.returncode == 0
    lines = [json.loads(line) for line in proc.stdout.splitlines()]
    assert len(lines) == 2
    first = lines[0]["element"]["terms"]
    assert first == [{"coeff": [[0, "1"]], "perm": "1,2"},
                     {"coeff": [[1, "1"]], "perm": "2,1"}]


def test_dump_filtration_report_21():
    proc = run_cli("dump", "filtration-report", "--lambda", "2,1")
    assert proc.returncode == 0
    rec = json.loads(proc.stdout.splitlines()[0])
    assert rec["lambda"] == "2,1"
    assert [l["mu"] for l in rec["layers"]] == ["2", "1,1"]
    assert rec["order_preserving"] == "pass"


def test_dump_cell_action_matrices():
    proc = run_cli("dump", "cell-action-matrices", "--lambda", "2,1")
    assert proc.returncode == 0
    lines = [json.loads(line) for line in proc.stdout.splitlines()]
    assert {rec["generator"] for rec in lines} == {1, 2}


def test_dump_unknown_kind_exits_2():
    proc = run_cli("dump", "nonsense")
    assert proc.returncode == 2

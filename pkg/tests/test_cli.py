import json
import subprocess
import sys

import pytest

from derham.cli import main, default_corpus_path


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_kb_pass(capsys):
    code, out, _ = run(["check-kb", "-f", "x^2", "--deterministic"], capsys)
    assert code == 0
    assert "equal: True" in out


def test_json_report_shape(capsys):
    code, out, _ = run(["check-kb", "-f", "x^3 + y^4", "--format", "json",
                        "--deterministic"], capsys)
    assert code == 0
    report = json.loads(out)
    assert list(report) == ["command", "input", "verdict", "evidence",
                            "timing_ms"]
    assert list(report["input"]) == ["f", "vars", "divisor"]
    assert list(report["verdict"]) == ["id", "left", "right", "equal",
                                       "certified"]
    assert list(report["evidence"]) == ["staircase", "truncation_trace"]
    assert report["verdict"]["left"] == [0, 0, 6]
    assert report["timing_ms"] == 0


def test_output_file(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, _, _ = run(["milnor", "-f", "x^3", "-o", str(out_path)], capsys)
    assert code == 0
    report = json.loads(out_path.read_text())
    assert report["verdict"]["left"]["value"] == 2


def test_parse_error_exits_2(capsys):
    code, _, err = run(["milnor", "-f", "x +"], capsys)
    assert code == 2
    assert "error:" in err


def test_undeclared_divisor_exits_2(capsys):
    code, _, _ = run(["check-log", "-f", "x^2", "-vars", "x", "-log", "q"],
                     capsys)
    assert code == 2


def test_missing_divisor_exits_2(capsys):
    code, _, _ = run(["check-log", "-f", "x^2"], capsys)
    assert code == 2


def test_nonisolated_exits_2(capsys):
    code, _, err = run(["check-kb", "-f", "x^2*y^2"], capsys)
    assert code == 2
    assert "non-isolated" in err


def test_instability_exits_3(capsys):
    code, out, _ = run(["twisted", "-f", "x^4", "--initial-degree", "1",
                        "--max-doublings", "0", "--format", "json"], capsys)
    assert code == 3
    report = json.loads(out)
    assert len(report["evidence"]["truncation_trace"]) == 1


def test_env_max_doublings(capsys, monkeypatch):
    monkeypatch.setenv("TDW_MAX_DOUBLINGS", "0")
    code, _, _ = run(["twisted", "-f", "x^4", "--initial-degree", "1"], capsys)
    assert code == 3
    monkeypatch.setenv("TDW_MAX_DOUBLINGS", "6")
    code, _, _ = run(["twisted", "-f", "x^4", "--initial-degree", "1"], capsys)
    assert code == 0


def test_corpus_mismatch_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.jsonl"
    bad.write_text(json.dumps(
        {"name": "wrong", "f": "x^2", "vars": ["x"],
         "expected": {"milnor": 5, "provenance": "deliberately wrong"}}) + "\n")
    code, out, _ = run(["corpus", str(bad)], capsys)
    assert code == 1
    assert "FAIL" in out


def test_corpus_missing_file_exits_2(capsys):
    code, _, _ = run(["corpus", "/nonexistent/corpus.jsonl"], capsys)
    assert code == 2


def test_corpus_small_subset(tmp_path, capsys):
    entries = [
        {"name": "a1", "f": "x^2", "vars": ["x"],
         "expected": {"milnor": 1, "provenance": "staircase"}},
        {"name": "log", "f": "x + y^2", "vars": ["x", "y"], "divisor": ["x"]},
    ]
    path = tmp_path / "small.jsonl"
    path.write_text("\n".join(json.dumps(e) for e in entries) + "\n")
    code, out, _ = run(["corpus", str(path), "--format", "json",
                        "--deterministic"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["all_pass"]
    ids = [v["id"] for m in report["members"] for v in m["verdicts"]]
    assert "KB" in ids and "KB-log" in ids and "expected-milnor" in ids


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "derham.cli", "milnor", "-f", "x^4",
         "--format", "json", "--deterministic"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"]["left"]["value"] == 3


def test_shipped_corpus_exists():
    with open(default_corpus_path()) as fh:
        assert sum(1 for line in fh if line.strip()) == 30

import json
import subprocess
import sys

import pytest

from hypertoric.cli import main


@pytest.fixture
def doc(tmp_path):
    def write(obj, name="in.json"):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_ok(capsys, doc):
    code, out, _ = run(capsys, "validate", doc({"a": [1, 2, 3]}))
    assert code == 0 and out == "valid\n"


def test_validate_failure(capsys, doc):
    code, out, _ = run(capsys, "validate", doc({"a": [2, 4, 3]}))
    assert code == 1
    assert "columns {1,2}" in out and "gcd of minors is 2" in out


def test_validate_json(capsys, doc):
    code, out, _ = run(capsys, "validate", doc({"A": [[1, 0, 2, 2], [0, 1, 0, 0]]}), "--format", "json")
    assert code == 1
    data = json.loads(out)
    assert not data["ok"]
    assert [3, 4] in [f["columns"] for f in data["failures"]]


def test_report_failure_witness(capsys, doc):
    code, out, _ = run(capsys, "report", doc({"a": [2, 4, 3]}))
    assert code == 1
    assert "{1,2}" in out


def test_invariants_json(capsys, doc):
    code, out, _ = run(capsys, "invariants", doc({"a": [1, 1, 3]}), "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["generators"]) == 13
    keys = [(sum(g["u"]) + sum(g["v"]), g["u"], g["v"]) for g in data["generators"]]
    assert keys == sorted(keys)
    assert data["grading"]["half_maximal_weight"] == 2


def test_invariants_text(capsys, doc):
    code, out, _ = run(capsys, "invariants", doc({"a": [1, 1, 2]}))
    assert code == 0
    assert out.startswith("11 generators")
    assert "relation: z1*w1 + z2*w2 + 2*z3*w3 = 0" in out


def test_chambers(capsys, doc):
    code, out, _ = run(capsys, "chambers", doc({"A": [[1, 0, 1, 2], [0, 1, 1, 1]]}), "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 8 and len(data["chambers"]) == 8
    code, out, _ = run(capsys, "chambers", doc({"a": [1, 2, 3]}))
    assert "2 chambers" in out and "{z1=0, z2=0, z3=0}" in out


def test_analyze(capsys, doc):
    code, out, _ = run(capsys, "analyze", doc({"a": [1, 1, 3]}), "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["generator_count"] == 13 and data["pi1_certified"]


def test_report_text(capsys, doc):
    code, out, _ = run(capsys, "report", doc({"A": [[1, 0, 1, 2], [0, 1, 1, 1]]}))
    assert code == 0
    assert "dim Sing(mu^-1(0)) = 1" in out
    assert "[    ok] conclusion" in out


@pytest.mark.parametrize("content", ["{not json", '{"a": "123"}', '{"a": [1, 2], "b": 1}'])
def test_parse_errors(capsys, doc, content):
    code, out, err = run(capsys, "report", doc(content))
    assert code == 2
    assert "parse error" in err and out == ""


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "report", str(tmp_path / "missing.json"))
    assert code == 2 and "error" in err


def test_usage_error(capsys):
    assert run(capsys, "frobnicate", "x")[0] == 2
    assert run(capsys)[0] == 2


def test_zero_entry_is_invalid(capsys, doc):
    code, _, _ = run(capsys, "report", doc({"a": [0, 1, 2]}))
    assert code == 1


def test_cap_exceeded(capsys, doc):
    code, _, err = run(capsys, "invariants", doc({"a": [1, 1, 5]}), "--max-degree", "3")
    assert code == 2 and "--max-degree" in err


def test_stdin_and_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "hypertoric", "validate", "-"],
        input='{"a": [1, 2, 3]}', capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "valid\n"

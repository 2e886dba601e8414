import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from sasaki.catalog import _default_path
from sasaki.cli import main, parse_params, UsageError


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_parse_params():
    assert parse_params("a1=1, b1=-1/2") == {"a1": 1, "b1": Fraction(-1, 2)}
    with pytest.raises(UsageError):
        parse_params("a1")
    with pytest.raises(UsageError):
        parse_params("a1=x")


def test_verify_md_and_json():
    code, text = run("verify", "g0")
    assert code == 0
    assert "alpha_einstein" in text and "overall: pass" in text
    code, text = run("verify", "g7", "--params", "delta=1/2", "--json")
    doc = json.loads(text)
    assert code == 0 and doc["ok"] and "wall_time_s" not in doc
    assert doc["reports"][0]["params"] == {"delta": "1/2"}


def test_verify_obstruction_line():
    code, text = run("verify", "sl2_r2", "--params", "a3=1,a4=1")
    assert code == 0
    assert "obstructed: true" in text


def test_usage_errors(capsys):
    assert run("verify", "g8", "--params", "delta=0")[0] == 2
    assert "delta>0 violated" in capsys.readouterr().err
    assert run("verify", "nope")[0] == 2
    assert run("verify", "g8", "--params", "delta=")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("lattice", "--samples", "-1")[0] == 2


def test_ricci_output():
    assert run("ricci", "caseB2", "--params", "a1=1,b1=1")[1].strip() == "diag(-4, -4, 0, 0, 4)"
    code, text = run("ricci", "h5", "--json")
    assert json.loads(text)["ricci"][4] == ["0", "0", "0", "0", "4"]
    assert run("ricci", "gt")[0] == 2


def test_lattice_command():
    code, text = run("lattice", "--samples", "20", "--seed", "7")
    assert code == 0 and text.startswith("20/20 closed")


def test_report_all_deterministic():
    code1, a = run("report-all", "--format", "json")
    code2, b = run("report-all", "--format", "json")
    assert code1 == code2 == 0
    assert a == b
    doc = json.loads(a)
    assert doc["summary"]["failed"] == 0 and doc["summary"]["rows"] == len(doc["rows"])


def test_report_all_flags_bad_golden(tmp_path, monkeypatch, capsys):
    doc = json.loads(_default_path().read_text())
    e = next(x for x in doc["entries"] if x["id"] == "g3")
    e["expected"]["unimodular"] = False
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc))
    monkeypatch.setenv("SASAKI_CATALOG", str(p))
    code, text = run("report-all", "--format", "md")
    assert code == 1
    assert "| g3 |  | FAIL | profile |" in text
    assert "FAIL g3" in capsys.readouterr().err


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "sasaki", "ricci", "h5"], capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.strip() == "diag(-2, -2, -2, -2, 4)"

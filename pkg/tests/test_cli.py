import json
import subprocess
import sys

import jsonschema
import pytest

from qcoord.cli import main
from qcoord.export import load_schema


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_identities_text(capsys):
    code, out, _ = run(capsys, "verify", "identities")
    assert code == 0
    assert "identities" in out and "OK" in out


def test_global_flags_before_and_after(capsys):
    a = run(capsys, "--format", "json", "verify", "identities", "--n", "2")
    b = run(capsys, "verify", "identities", "--format", "json", "--n", "2")
    assert a[0] == b[0] == 0
    assert json.loads(a[1])["n"] == json.loads(b[1])["n"] == 2


def test_verify_json_report(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "containment", "--format", "json", "--output", str(path))
    assert code == 0
    data = json.loads(out)
    assert data == json.loads(path.read_text())
    jsonschema.validate(data, load_schema("report"))
    assert data["passed"] and all(c["status"] == "pass" for c in data["checks"])


def test_verbose_lists_passing_checks(capsys):
    _, quiet, _ = run(capsys, "verify", "identities")
    _, loud, _ = run(capsys, "verify", "identities", "--verbose")
    assert len(loud.splitlines()) > len(quiet.splitlines())


def test_unknown_suite_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "everything")
    assert code == 2 and "invalid choice" in err


def test_matrix_size_restriction(capsys):
    code, _, err = run(capsys, "verify", "centers", "--n", "2")
    assert code == 2 and "error" in err


def test_catalog_export_stdout(capsys):
    code, out, _ = run(capsys, "catalog", "export")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, load_schema("catalog"))
    assert len(data["entries"]) == 36


def test_catalog_export_file(capsys, tmp_path):
    path = tmp_path / "c.json"
    code, out, _ = run(capsys, "catalog", "export", str(path))
    assert code == 0 and "36 entries" in out
    assert len(json.loads(path.read_text())["entries"]) == 36


def test_catalog_export_unwritable(capsys, tmp_path):
    code, _, err = run(capsys, "catalog", "export", str(tmp_path / "no" / "such" / "c.json"))
    assert code == 2 and err


def test_poset(capsys):
    code, out, _ = run(capsys, "poset")
    assert code == 0
    assert "321,321 < " in out
    code, out, _ = run(capsys, "poset", "--format", "json")
    assert "231,321" in json.loads(out)["order"]["321,321"]


def test_primitive_symbolic(capsys):
    code, out, _ = run(capsys, "primitive", "--w", "321,321")
    assert code == 0
    assert "(none)" in out
    assert "X21*X32 + (-q)*X22*X31 + (-beta)*X13" in out


def test_primitive_numeric_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "primitive", "--w", "123,123", "--alpha", "2", "--beta", "1/3", "--gamma", "-1")
    assert code == 0
    data = json.loads(out)
    assert data["parameters"] == {"alpha": "2", "beta": "1/3", "gamma": "-1"}
    assert [g["text"] for g in data["generators"]][-3:] == ["X11 - 2", "X22 - 1/3", "X33 + 1"]


def test_primitive_sl(capsys):
    code, out, _ = run(capsys, "primitive", "--w", "132,132", "--sl")
    assert code == 0 and "alpha^-1" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["primitive", "--w", "321,321", "--alpha", "0"],
        ["primitive", "--w", "321,421"],
        ["primitive", "--w", "321,321", "--alpha", "x"],
        ["primitive"],
        [],
    ],
)
def test_primitive_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qcoord", "verify", "identities", "--n", "2"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert "identities" in proc.stdout


def test_failed_check_exits_one(capsys, monkeypatch):
    from qcoord import cli
    from qcoord.suites import Check, VerificationReport

    failing = VerificationReport("identities", 5, 3, [Check("identities", "broken", "an anchor", "fail", "nonzero remainder")], 0.0)
    monkeypatch.setattr(cli, "verify_suite", lambda *a, **k: failing)
    code, out, _ = run(capsys, "verify", "identities")
    assert code == 1 and "broken" in out

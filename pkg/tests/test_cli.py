import json
import subprocess
import sys

import pytest

from cpog.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_describe(capsys):
    code, out, _ = run(capsys, "describe", "Z4xZ2")
    assert code == 0
    assert "order:     8" in out
    rows = [line.split() for line in out.splitlines()[-3:]]
    assert rows == [["1", "1"], ["2", "3"], ["4", "4"]]
    code, out, _ = run(capsys, "describe", "D6")
    assert [line.split() for line in out.splitlines()[-4:]] == [["1", "1"], ["2", "7"], ["3", "2"], ["6", "2"]]
    _, out, _ = run(capsys, "describe", "Z12")
    assert "canonical: Z_4 x Z_3" in out


def test_degrees_both(capsys):
    code, out, _ = run(capsys, "degrees", "Z4xZ2", "--method", "both")
    assert code == 0
    rows = [line.split() for line in out.splitlines()[2:]]
    assert rows == [["1", "1", "7", "7", "match"], ["2", "3", "7", "7", "match"], ["4", "4", "4", "4", "match"]]


def test_degrees_dihedral_and_large(capsys):
    _, out, _ = run(capsys, "degrees", "D6")
    assert ["2", "7", "11", "11", "match"] in [line.split() for line in out.splitlines()]
    code, out, _ = run(capsys, "degrees", "Z8xZ2xZ9")
    assert code == 0
    assert ["12", "8", "12", "12", "match"] in [line.split() for line in out.splitlines()]


def test_degrees_single_method(capsys):
    _, out, _ = run(capsys, "degrees", "Z4xZ2", "--method", "formula")
    assert out.splitlines()[1].split() == ["order", "count", "formula"]
    _, out, _ = run(capsys, "degrees", "Z4xZ2", "--method", "brute")
    assert out.splitlines()[-1].split() == ["4", "4", "4"]


@pytest.mark.parametrize("group, spectrum", [
    ("Z2xZ3", "{6:4, 4:1, 0:1}"),
    ("D9", "{18:12, 12:5, 0:1}"),
    ("D3", "{6:5, 0:1}"),
])
def test_spectrum_both(capsys, group, spectrum):
    code, out, _ = run(capsys, "spectrum", group, "--method", "both")
    assert code == 0
    assert spectrum in out.splitlines()[0]
    assert f"exact: {spectrum}" in out
    assert "verdict: PASS" in out


def test_spectrum_outside_families(capsys):
    code, _, err = run(capsys, "spectrum", "Z6xZ5", "--method", "closed-form")
    assert code == 2
    assert "no closed-form spectrum" in err
    code, out, _ = run(capsys, "spectrum", "Z6xZ5", "--method", "exact")
    assert code == 0
    assert "verdict: PASS" in out


def test_spectrum_exact_non_integral(capsys):
    # smallest abelian case whose order-class quotient has irrational eigenvalues
    code, out, _ = run(capsys, "spectrum", "Z4xZ9", "--method", "exact")
    assert code == 0
    assert "exact: {36:4, 18:1, 12:6, 10:3, 6:5, 4:12, 0:1}" in out
    assert "non-integral part: roots of x^4 - 54x^3 + 1028x^2 - 8040x + 21312" in out


@pytest.mark.parametrize("group, fmt, check", [
    ("Z2xZ2", "dot", lambda text: text.count(" -- ") == 6),
    ("Z4xZ2", "csv", lambda text: len(text.splitlines()) == 23),
    ("D3", "json", lambda text: len(json.loads(text)["vertices"]) == 6 and len(json.loads(text)["edges"]) == 15),
])
def test_export(capsys, tmp_path, group, fmt, check):
    path = tmp_path / f"out.{fmt}"
    code, _, _ = run(capsys, "export", group, "--format", fmt, "-o", str(path))
    assert code == 0
    assert check(path.read_text())


def test_export_json_with_spectrum(capsys, tmp_path):
    path = tmp_path / "d9.json"
    run(capsys, "export", "D9", "--format", "json", "-o", str(path), "--with-spectrum")
    doc = json.loads(path.read_text())
    assert doc["spectrum"] == {"closed_form": [[18, 12], [12, 5], [0, 1]], "certified": True}
    run(capsys, "export", "Z12", "--format", "json", "-o", str(path), "--with-spectrum")
    assert json.loads(path.read_text())["spectrum"] == {"closed_form": None, "certified": None}


def test_export_io_failure(capsys, tmp_path):
    code = main(["export", "Z4", "--format", "csv", "-o", str(tmp_path / "missing" / "x.csv")])
    assert code != 0


def test_deterministic(capsys):
    outs = {run(capsys, "spectrum", "Z4xZ2")[1] for _ in range(2)}
    assert len(outs) == 1


@pytest.mark.parametrize("argv", [
    ["describe", "Z1xZ4"],
    ["describe", "D2"],
    ["describe", "Z100xZ100"],
    ["--cap", "10", "describe", "Z12"],
    ["describe", "Z12", "--cap", "10"],
    ["verify", "spectra", "--max-graph", "6000"],
])
def test_errors_exit_nonzero(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("cpog: error:")


def test_cap_override(capsys):
    code, out, _ = run(capsys, "--cap", "10000", "describe", "Z100xZ100")
    assert code == 0 and "order:     10000" in out


@pytest.mark.parametrize("target, flag, value, cases", [
    ("degrees-abelian", "--max-order", "30", None),
    ("degrees-dihedral", "--max-n", "20", None),
    ("spectra", "--max-graph", "60", None),
    ("block", "--max-pq", "5", 25),
])
def test_verify_small(capsys, target, flag, value, cases):
    code, out, _ = run(capsys, "verify", target, flag, value)
    assert code == 0
    assert "verdict:  PASS" in out
    if cases is not None:
        assert f"cases:    {cases}/{cases} passed" in out


def test_verify_parallel_matches_serial(capsys):
    serial = run(capsys, "verify", "degrees-abelian", "--max-order", "40")[1]
    parallel = run(capsys, "verify", "degrees-abelian", "--max-order", "40", "--jobs", "2")[1]
    assert serial == parallel


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "cpog", "describe", "Z6"], capture_output=True, text=True)
    assert res.returncode == 0
    assert "canonical: Z_2 x Z_3" in res.stdout

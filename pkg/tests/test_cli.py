import csv
import io
import json

import pytest

from pwkilling import cli
from pwkilling import classify as C
from pwkilling.cli import EXIT_FAIL, EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, main


def run(*argv):
    out = io.StringIO()
    rc = main(list(argv), out)
    return rc, out.getvalue()


def run_json(*argv):
    rc, text = run("--json", *argv)
    return rc, json.loads(text)


# --- classify -------------------------------------------------------------

@pytest.mark.parametrize("argv,dims", [
    (["--problem", "conformal", "--a1", "8/3", "--a2", "2/3"], (36, 27, 9)),
    (["--a2", "2"], (23, 21, 2)),
    (["--problem", "conformal", "--epsilon", "1", "--a1", "2", "--a2", "2"], (84, 84, 0)),
])
def test_classify_examples(argv, dims):
    rc, rec = run_json("classify", *argv)
    assert rc == EXIT_OK
    assert (rec["dims"]["total"], rec["dims"]["reducible"], rec["dims"]["irreducible"]) == dims
    assert rec["schema_version"] == cli.SCHEMA_VERSION and rec["command"] == "classify"


def test_classify_text_output():
    rc, text = run("classify", "--a2", "2")
    assert rc == EXIT_OK
    assert text.startswith("killing (0, 0, 2, 0): total 23, reducible 21, irreducible 2")


def test_classify_rejects_decimal_input():
    assert run("classify", "--a1", "0.5")[0] == EXIT_USAGE
    assert run("classify", "--epsilon", "2")[0] == EXIT_USAGE
    assert run("classify", "--problem", "geodesic")[0] == EXIT_USAGE


def test_classify_negative_values():
    rc, rec = run_json("classify", "--problem", "conformal", "--a1", "-8/3", "--a2", "-2/3")
    assert rc == EXIT_OK and rec["params"]["a1"] == "-8/3" and rec["dims"]["total"] == 36


def test_classify_basis():
    rc, rec = run_json("classify", "--epsilon", "1", "--a2", "3/4", "--basis")
    assert rc == EXIT_OK and len(rec["basis"]) == 27
    assert all(len(row) == 50 for row in rec["basis"])
    assert all(isinstance(x, str) for row in rec["basis"] for x in row)


def test_classify_reports_shifted_point():
    rc, rec = run_json("classify", "--problem", "conformal", "--epsilon", "1",
                       "--a1", "-5/4", "--a2", "11/4", "--gamma", "1")
    assert rc == EXIT_OK and rec["dims"]["total"] == 29
    assert rec["computed_at"] == {"epsilon": "0", "a1": "-1", "a2": "3", "gamma": "1"}


def test_json_round_trip():
    rc, rec = run_json("classify", "--problem", "conformal", "--a1", "8/3", "--a2", "2/3")
    flags = [x for k, v in rec["params"].items() for x in (f"--{k}", v)]
    assert all(isinstance(v, str) and "." not in v for v in rec["params"].values())
    rc2, rec2 = run_json("classify", "--problem", rec["problem"], *flags)
    assert rc2 == EXIT_OK and rec2["dims"] == rec["dims"]


def test_internal_error_exit_code(monkeypatch):
    monkeypatch.setattr(C, "reducible_constant", lambda p, problem: 20)
    assert run("classify", "--a1", "1", "--a2", "2", "--gamma", "1")[0] == EXIT_INTERNAL


# --- scan -----------------------------------------------------------------

def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_scan_flags_special_point():
    rc, text = run("scan", "--epsilon", "1", "--a2", "0:1:1/16")
    assert rc == EXIT_OK
    assert text.splitlines()[0] == "epsilon,a1,a2,gamma,dim,flagged"
    rows = _rows(text)
    assert len(rows) == 17
    flagged = {r["a2"]: r["dim"] for r in rows if r["flagged"] == "1"}
    assert flagged == {"0": "50", "3/4": "27"}


def test_scan_single_point_and_json():
    rc, recs = run_json("scan", "--epsilon", "1", "--a2", "3/4:3/4:1/8")
    assert rc == EXIT_OK and len(recs) == 1
    assert recs[0]["dims"]["total"] == 27 and recs[0]["flagged"] is False


def test_scan_derived_axis():
    rc, text = run("scan", "--problem", "conformal", "--a1", "-1:0:1/3", "--a2", "a1-2")
    rows = _rows(text)
    assert rc == EXIT_OK
    assert [(r["a1"], r["a2"], r["dim"]) for r in rows] == [
        ("-1", "-3", "27"), ("-2/3", "-8/3", "36"), ("-1/3", "-7/3", "27"), ("0", "-2", "27")]


@pytest.mark.parametrize("argv", [
    ["--a1", "0:200:1", "--a2", "0:200:1"],
    ["--a1", "0:3:1", "--limit", "2"],
    ["--a1", "1"],
    ["--a1", "0:1"],
    ["--a1", "1:0:1/2"],
    ["--a1", "0:1:0.5"],
    ["--a1", "a2+1", "--a2", "a1-1"],
])
def test_scan_usage_errors(argv):
    assert run("scan", *argv)[0] == EXIT_USAGE


# --- verify ---------------------------------------------------------------

def test_verify_case():
    rc, rec = run_json("verify", "--case", "KT-Thm1.3(1a)", "--points", "5")
    assert rc == EXIT_OK and rec["pass"] and rec["residual_max"] < 1e-7
    assert rec["dims"]["total"] == 22


def test_verify_conformal_case():
    rc, rec = run_json("verify", "--case", "CKT-Thm1.1(2)", "--points", "5")
    assert rc == EXIT_OK and rec["dims"]["total"] == 29 and rec["pass"]


def test_verify_parameters_and_failure():
    rc, text = run("verify", "--epsilon", "1", "--a2", "3/4", "--points", "3")
    assert rc == EXIT_OK and "PASS" in text
    rc, rec = run_json("verify", "--epsilon", "1", "--a2", "3/4", "--points", "3", "--tol", "1e-30")
    assert rc == EXIT_FAIL and not rec["pass"] and rec["offenders"]


def test_verify_unknown_case():
    assert run("verify", "--case", "nope")[0] == EXIT_USAGE


# --- reproduce ------------------------------------------------------------

def test_reproduce_theorem_three():
    rc, text = run("reproduce", "--theorem", "3")
    lines = text.splitlines()
    assert rc == EXIT_OK and len(lines) == 9 and all(l.endswith("PASS") for l in lines)


def test_reproduce_json():
    rc, recs = run_json("reproduce", "--theorem", "4")
    assert rc == EXIT_OK and [r["got"][0] for r in recs][:4] == [1, 1, 4, 5]
    rc, recs = run_json("reproduce", "--theorem", "2")
    assert rc == EXIT_OK and all(r["pass"] and "dims" in r for r in recs)


def test_reproduce_bad_theorem():
    assert run("reproduce", "--theorem", "7")[0] == EXIT_USAGE

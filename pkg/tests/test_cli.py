import io
import json

import pytest

from bigjacobi.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


BASE = ("--alpha", "0", "--beta", "0", "--c", "1/2")


def test_eigen_check_exact():
    code, text = run("check", "eigen", *BASE, "--n-max", "30")
    assert code == 0
    report = json.loads(text)
    assert report == {
        "check": "eigen",
        "params": {"alpha": "0", "beta": "0", "c": "1/2"},
        "n_range": [0, 30],
        "max_abs_error": "0",
        "tolerance": 0,
        "pass": True,
    }


def test_ortho_check():
    code, text = run("check", "ortho", *BASE, "--n-max", "12")
    assert code == 0
    rows = [json.loads(line) for line in text.splitlines()]
    assert [r["check"] for r in rows] == ["ortho-offdiag", "ortho-norm-ratio"]
    assert rows[0]["max_abs_error"] < 1e-10


def test_tolerance_override_fails_check():
    code, _ = run("check", "ortho", *BASE, "--n-max", "6", "--tol-off", "0")
    assert code == 1


def test_degenerate_c_rejected():
    code, text = run("check", "eigen", "--alpha", "0", "--beta", "0", "--c", "1")
    assert code == 2
    err = json.loads(text)["error"]
    assert err["type"] == "ParameterError"


@pytest.mark.parametrize("argv", [
    ("check", "bogus", *BASE),
    ("check", "eigen", "--alpha", "x", "--beta", "0", "--c", "1/2"),
    ("check", "eigen", "--beta", "0", "--c", "1/2"),
    ("table", "bogus", *BASE),
    ("check", "limit-bi", "--alpha", "0", "--beta", "0", "--c", "3"),
])
def test_invalid_requests(argv):
    code, text = run(*argv)
    assert code == 2
    assert "error" in json.loads(text)


def test_all_checks_csv_on_upper_branch():
    code, text = run("check", "all", "--alpha", "2", "--beta", "1", "--c", "3", "--n-max", "8", "--format", "csv")
    lines = text.splitlines()
    assert lines[0] == "check,alpha,beta,c,n_lo,n_hi,max_abs_error,tolerance,pass"
    assert code == 0
    assert not any(line.startswith("limit-bi") for line in lines)
    assert all(line.endswith("true") for line in lines[1:])


def test_output_is_deterministic():
    first = run("check", "all", *BASE, "--n-max", "6", "--seed", "3")
    second = run("check", "all", *BASE, "--n-max", "6", "--seed", "3")
    assert first == second


def test_seeded_sweep_adds_parameter_sets():
    _, text = run("check", "eigen", *BASE, "--n-max", "4", "--seed", "11", "--sweep-count", "2")
    rows = [json.loads(line) for line in text.splitlines()]
    assert len(rows) == 3
    assert rows[0]["params"]["c"] == "1/2"


def test_coeffs_table():
    code, text = run("table", "coeffs", *BASE, "--n-max", "2")
    assert code == 0
    assert text.splitlines() == [
        "n,u_n,b_n,u_n_float,b_n_float",
        "0,,1/4,,0.25",
        "1,9/16,0,0.5625,0.0",
        "2,1/16,0,0.0625,0.0",
    ]


def test_polys_table_json():
    code, text = run("table", "polys", *BASE, "--n-max", "1", "--format", "json")
    rows = [json.loads(line) for line in text.splitlines()]
    assert rows[1] == {"n": 1, "poly": "x - 1/4", "coeffs": "-1/4 1"}


def test_weight_samples():
    code, text = run("table", "weight-samples", "--alpha", "1", "--beta", "1", "--c", "1/2", "--x", "3/4")
    assert code == 0
    assert text.splitlines()[1].startswith("3/4,0.75,0.437")
    code, text = run("table", "weight-samples", *BASE, "--x", "1/10")
    assert code == 2 and json.loads(text)["error"]["type"] == "DomainError"
    code, text = run("table", "weight-samples", *BASE, "--points", "3")
    assert len(text.splitlines()) == 1 + 6


def test_bi_and_q_tables():
    code, text = run("table", "bi-coeffs", *BASE, "--n-max", "2", "--N", "64")
    assert code == 0
    assert text.splitlines()[1].startswith("0,48/65,0,3/4,0")
    code, text = run("table", "q-sweep", *BASE, "--n-max", "2", "--eps", "0.001")
    assert code == 0 and len(text.splitlines()) == 3
    code, _ = run("table", "bi-coeffs", *BASE, "--n-max", "40", "--N", "64")
    assert code == 2

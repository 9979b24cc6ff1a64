"""End-to-end checks of the command-line tool."""

import json
import os
import subprocess

CLI = os.environ["SCHURW_CLI"]


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_fn_q_canonical_bytes():
    r = run("fn", "--basis", "q", "--lambda", "2,1")
    assert r.returncode == 0
    assert r.stdout.strip() == (
        '{"terms":[{"coeff":"4/3","monomial":{"1":"3"}},'
        '{"coeff":"-4","monomial":{"3":"1"}}]}'
    )


def test_fn_deterministic():
    a = run("fn", "--basis", "schur", "--lambda", "3,1")
    b = run("fn", "--basis", "schur", "--lambda", "3,1")
    assert a.stdout == b.stdout
    assert a.returncode == 0


def test_fn_hl_rho():
    # H_(2)(t; 1/2) = (1/8) t1^2 + (3/4) t2
    r = run("fn", "--basis", "hl", "--lambda", "2", "--rho", "1/2")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["terms"] == [
        {"coeff": "1/8", "monomial": {"1": "2"}},
        {"coeff": "3/4", "monomial": {"2": "1"}},
    ]


def test_coef_dfact():
    r = run("coef", "--name", "dfact", "--args", "-5")
    assert r.returncode == 0
    assert r.stdout.strip() == '"1/3"'


def test_coef_values():
    assert run("coef", "--name", "d", "--args", "3,0").stdout.strip() == '"3/4"'
    assert run("coef", "--name", "E", "--args", "2,1").stdout.strip() == '"4/3"'
    assert run("coef", "--name", "A", "--args", "1,2").stdout.strip() == '"4/3"'
    assert (
        run("coef", "--name", "c-chain", "--args", "3,1").stdout.strip() == '"2"'
    )


def test_act_cross_check():
    r = run("act", "--op", "P", "--k", "2", "--m", "0", "--basis", "q",
            "--lambda", "3,1", "--mode", "all")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["agree"] is True
    assert doc["closed"]["terms"] == [{"coeff": "16", "partition": [3, 1]}]


def test_act_named():
    r = run("act", "--op", "Lhat", "--m", "-1", "--basis", "q",
            "--lambda", "1", "--mode", "all")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["agree"] is True
    assert {"coeff": "4", "partition": [3]} in doc["closed"]["terms"]
    assert {"coeff": "-1", "partition": [2, 1]} in doc["closed"]["terms"]


def test_tau_kw_order_one():
    r = run("tau", "--model", "kw", "--order", "1", "--method", "both")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["order"] == 1
    assert doc["components"]["1"] == [
        {"coeff": "1/6", "monomial": {"1": "3"}},
        {"coeff": "1/8", "monomial": {"3": "1"}},
    ]


def test_usage_errors_exit_2():
    assert run("fn", "--basis", "nope", "--lambda", "1").returncode == 2
    assert run("act", "--op", "What", "--m", "2", "--basis", "q",
               "--lambda", "1").returncode == 2
    assert run("bogus").returncode == 2


def test_verify_suite_exit_0():
    r = run("verify", "--suite", "virasoro")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert all(entry["pass"] for entry in doc)

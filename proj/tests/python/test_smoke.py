"""Smoke tests for the python extension module."""

import json

import schurw


def test_character_polynomials():
    q21 = schurw.qfun([2, 1])
    assert json.loads(q21.to_json()) == [
        {"coeff": "4/3", "monomial": {"1": "3"}},
        {"coeff": "-4", "monomial": {"3": "1"}},
    ]
    s2 = schurw.schur([2])
    assert s2.degree() == 2
    assert not s2.is_zero()


def test_poly_arithmetic():
    t1 = schurw.var(1)
    assert (t1 + t1) == t1 * schurw.constant("2")
    assert t1.partial(1) == schurw.constant("1")
    assert schurw.qfun([2, 1]).evaluate({3: "1/3"}) == "-4/3"


def test_straighten():
    assert schurw.straighten([1, 2], "q") == {(2, 1): "-1"}
    assert schurw.straighten([1, 3], "schur") == {(2, 2): "-1"}
    assert schurw.straighten([1, 1], "q") == {}


def test_operator_routes_agree():
    closed = schurw.apply_P_closed(2, 0, [3, 1], "q")
    assert closed == {(3, 1): "16"}
    brute = schurw.apply_P_brute(2, 0, schurw.qfun([3, 1]), "-1")
    modes = schurw.apply_P_modes(2, 0, schurw.qfun([3, 1]), "-1")
    assert brute == modes


def test_named_operators():
    w = schurw.apply_named("WBGW", 0, schurw.constant("1"))
    assert json.loads(w.to_json()) == [{"coeff": "1/8", "monomial": {"1": "1"}}]
    action = schurw.closed_action_named("Lhat", -1, [1])
    assert action == {(3,): "4", (2, 1): "-1"}


def test_coefficients():
    assert schurw.coeff_d(3, 0) == "3/4"
    assert schurw.coeff_c(3, 1, 1) == "12"
    assert schurw.E_coeff([2, 1]) == "4/3"
    assert schurw.A_coeff([1, 2]) == "4/3"
    assert schurw.A_pfaffian([4, 2]) == "4/9"
    assert schurw.chain_count([2, 1]) == "1"
    assert schurw.double_fact(-5) == "1/3"
    assert schurw.a_coeff([3]) == "5/24"


def test_tau():
    doc = json.loads(schurw.tau("kw", 1, "both"))
    assert doc["components"]["1"] == [
        {"coeff": "1/6", "monomial": {"1": "3"}},
        {"coeff": "1/8", "monomial": {"3": "1"}},
    ]
    doc = json.loads(schurw.tau("bgw", 2, "both"))
    assert doc["components"]["2"] == [
        {"coeff": "9/128", "monomial": {"1": "2"}}
    ]


def test_inner_product():
    assert schurw.q_inner(schurw.qfun([1]), schurw.qfun([1])) == "2"
    assert schurw.expand_in_basis(schurw.qfun([1, 2]), "q") == {(2, 1): "-1"}


def test_verify_suite():
    ok, cases = schurw.verify_suite("virasoro")
    assert ok
    assert cases > 0

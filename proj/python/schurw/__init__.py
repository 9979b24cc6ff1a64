"""Exact vertex-operator engine for Schur and Schur Q-functions."""

from ._core import (
    A_coeff,
    A_pfaffian,
    DiscrepancyError,
    E_coeff,
    Poly,
    a_coeff,
    apply_B,
    apply_Bstar,
    apply_named,
    apply_P_brute,
    apply_P_closed,
    apply_P_modes,
    chain_count,
    closed_action_named,
    coeff_c,
    coeff_d,
    coeff_g,
    coeff_h,
    constant,
    double_fact,
    expand_in_basis,
    hall_littlewood,
    q_inner,
    qfun,
    schur,
    straighten,
    tau,
    var,
    verify_suite,
)

__all__ = [
    "A_coeff",
    "A_pfaffian",
    "DiscrepancyError",
    "E_coeff",
    "Poly",
    "a_coeff",
    "apply_B",
    "apply_Bstar",
    "apply_named",
    "apply_P_brute",
    "apply_P_closed",
    "apply_P_modes",
    "chain_count",
    "closed_action_named",
    "coeff_c",
    "coeff_d",
    "coeff_g",
    "coeff_h",
    "constant",
    "double_fact",
    "expand_in_basis",
    "hall_littlewood",
    "q_inner",
    "qfun",
    "schur",
    "straighten",
    "tau",
    "var",
    "verify_suite",
]

"""Multiple zeta values, Euler sums and identity checks."""

import json
from fractions import Fraction

from ._mzvkit import (
    DomainError,
    NonConvergenceError,
    ParseError,
    UnknownCheckError,
    bernoulli as _bernoulli,
    check_ids,
    dual_index,
    eval_mpl,
    gamma_coeffs,
    parse_index,
    run_check_json,
    run_suite_json,
    theorem3_coefficient as _theorem3_coefficient,
)

__all__ = [
    "DomainError",
    "NonConvergenceError",
    "ParseError",
    "UnknownCheckError",
    "bernoulli",
    "check_ids",
    "dual_index",
    "eval_mpl",
    "gamma_coeffs",
    "parse_index",
    "run_check",
    "run_suite",
    "theorem3_coefficient",
]


def bernoulli(n):
    """B_n as a Fraction (B_1 = -1/2)."""
    return Fraction(_bernoulli(n))


def theorem3_coefficient(s, variant="proof_chain"):
    return Fraction(_theorem3_coefficient(s, variant))


def run_check(check_id, params, digits=40, tol=1e-12):
    """One check as the dict of its JSON record."""
    return json.loads(run_check_json(check_id, dict(params), digits, tol))


def run_suite(filter="all", digits=40, tol=1e-12):
    """All matching checks as a list of JSON records."""
    return json.loads(run_suite_json(filter, digits, tol))

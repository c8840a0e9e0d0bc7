# tests/certify/test_harder.py
import mpmath

from qmcert.domains.certify.harder import (
    BOUNDARY_T,
    bracket_a,
    check_boundary,
    check_bracket_identities,
    check_coefficient_formulas,
    check_delta_bound,
    check_divisor_bounds,
    check_htinv,
    check_j3,
    g_value,
)
from qmcert.domains.rqm import rqm_eval


def test_bracket_factor_vanishes_at_boundary():
    # a = P·T^3 − (10/3)·P^2·T^2 is zero at t = 3π/10
    assert abs(rqm_eval(bracket_a(), BOUNDARY_T).value) < mpmath.mpf(10) ** -40


def test_exact_links():
    certs = check_bracket_identities() + check_htinv()
    assert [c.name for c in certs if not c.passed] == []


def test_coefficient_formulas_and_bounds():
    assert all(c.passed for c in check_coefficient_formulas(30))
    assert check_divisor_bounds(30).passed
    assert all(c.passed for c in check_j3(30))


def test_delta_bound_and_boundary():
    assert check_delta_bound().passed
    assert check_boundary().passed


def test_g_is_positive_and_increasing_on_samples():
    ts = [mpmath.mpf(t) for t in ("0.05", "0.2", "0.5", "0.9")]
    values = [g_value(t) for t in ts]
    assert all(v > 0 for v in values)
    assert values == sorted(values)

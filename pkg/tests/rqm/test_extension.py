# tests/rqm/test_extension.py
from fractions import Fraction

import mpmath
import pytest

from qmcert.core.exceptions import DomainError, InhomogeneousError, RingMismatchError
from qmcert.domains.qm1 import DELTA, E2, E4, E6
from qmcert.domains.qm2 import entities as theta
from qmcert.domains.rqm import (
    RqmElem,
    as_rqm,
    axis_eval,
    rqm_components,
    rqm_derivative,
    rqm_eval,
    rqm_flip,
    rqm_leading_limit,
    rqm_serre,
    rqm_slash_S,
)

P, T = RqmElem.P(), RqmElem.T()


def test_slash_of_generators():
    assert rqm_slash_S(E4) == as_rqm(E4)
    assert rqm_slash_S(E6) == as_rqm(E6)
    assert rqm_slash_S(E2) == as_rqm(E2) - P * T * 6


def test_slash_of_depth_one_product():
    # (E2E4 - E6)|S = (E2E4 - E6) - 6PT·E4
    assert rqm_slash_S(E2 * E4 - E6) == as_rqm(E2 * E4 - E6) - P * T * as_rqm(E4) * 6


def test_slash_needs_single_weight():
    with pytest.raises(InhomogeneousError):
        rqm_slash_S(E2 + E4)


def test_flip_is_an_involution():
    for f in (E2, E4 * E2, DELTA):
        x = as_rqm(f)
        assert rqm_flip(rqm_flip(x)) == x
    g = as_rqm(theta.H2 ** 3 * theta.H4)
    assert rqm_flip(rqm_flip(g)) == g


def test_derivative_of_T():
    assert rqm_derivative(T) == P * T ** 2 / 2
    assert rqm_derivative(P).is_zero()


def test_serre_commutes_with_slash():
    f = E2 * E4 - E6
    assert rqm_slash_S(f.serre(6)) == rqm_serre(rqm_slash_S(f), 6)


def test_level_mixing():
    x = as_rqm(E4) + as_rqm(theta.H2 * theta.H2)
    assert x.level == 2
    with pytest.raises(RingMismatchError):
        as_rqm(theta.H2).promote(1)


def test_evaluation_at_i():
    v = rqm_eval(E2, 1)
    assert abs(v.value - 3 / mpmath.pi) < mpmath.mpf(10) ** -25
    # E2(i) - 3/π vanishes, the P-term carries π^(-1)
    diff = rqm_eval(as_rqm(E2) - P * 3, 1)
    assert abs(diff.value) < mpmath.mpf(10) ** -25


def test_axis_eval_goes_through_the_flip():
    t = mpmath.mpf("0.5")
    direct = rqm_eval(E4, t)
    flipped = axis_eval(E4, t)
    assert flipped.flipped
    assert abs(direct.value - flipped.value) < mpmath.mpf(10) ** -20 * direct.magnitude


def test_eval_rejects_nonpositive_t():
    with pytest.raises(DomainError):
        rqm_eval(E4, 0)


def test_leading_limit():
    assert rqm_leading_limit(E4 * E6, E2 ** 5) == (Fraction(1), 0)
    assert rqm_leading_limit(P * P * 18 * as_rqm(E4), E4) == (Fraction(18), 2)
    with pytest.raises(DomainError):
        rqm_leading_limit(DELTA, E4 * E4 * E4)


def test_components_group_by_p_and_t():
    groups = rqm_components(rqm_slash_S(E2 * E4 - E6))
    assert set(groups) == {(0, 0), (1, 1)}
    assert groups[(1, 1)] == -6 * E4


@pytest.mark.parametrize("t", ["0.5", 1, 2])
def test_flip_matches_evaluation_at_the_inverse_point(t):
    t = mpmath.mpf(t)
    elements = (
        as_rqm(E2),
        as_rqm(E4 * E2) + P * T * as_rqm(E6),
        as_rqm(DELTA) * T ** 2 + P,
        as_rqm(theta.H2 ** 3 * theta.H4),
    )
    for x in elements:
        there = rqm_eval(x, 1 / t)
        here = rqm_eval(rqm_flip(x), t)
        assert abs(here.value - there.value) < mpmath.mpf(10) ** -25 * there.magnitude


def test_derivative_is_a_derivation_on_random_pairs(random_rqm, rng):
    for _ in range(6):
        x, y = random_rqm(), random_rqm()
        assert rqm_derivative(x * y) == rqm_derivative(x) * y + x * rqm_derivative(y)
        k, l = rng.randint(0, 12), rng.randint(0, 12)
        assert rqm_serre(x * y, k + l) == rqm_serre(x, k) * y + x * rqm_serre(y, l)

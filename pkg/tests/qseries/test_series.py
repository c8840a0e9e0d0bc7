# tests/qseries/test_series.py
from fractions import Fraction

import mpmath
import pytest

from qmcert.core.exceptions import DomainError, PrecisionError
from qmcert.domains.qseries import (
    QSeries,
    delta_qexp,
    eisenstein_qexp,
    r4_count,
    r4_enumerate,
    series_D,
    series_eval,
    series_inverse,
    series_reindex,
    series_vanishing_order,
    theta4_qexp,
)


def coeffs(series, count, step=2, start=0):
    return [series.coefficient(start + step * i) for i in range(count)]


def test_eisenstein_coefficients():
    assert coeffs(eisenstein_qexp(2, 10), 4) == [1, -24, -72, -96]
    assert coeffs(eisenstein_qexp(4, 10), 4) == [1, 240, 2160, 6720]
    assert coeffs(eisenstein_qexp(6, 10), 3) == [1, -504, -16632]


def test_eisenstein_rejects_unknown_weight():
    with pytest.raises(DomainError):
        eisenstein_qexp(8, 10)


def test_r4_values_and_enumeration():
    assert [r4_count(n) for n in range(5)] == [1, 8, 24, 32, 24]
    for n in range(201):
        assert r4_count(n) == r4_enumerate(n)


def test_thetanull_expansions():
    h2 = theta4_qexp(2, 6)
    assert coeffs(h2, 3, start=1) == [16, 64, 96]
    assert h2.coefficient(0) == 0
    h4 = theta4_qexp(4, 6)
    assert coeffs(h4, 5, step=1) == [1, -8, 24, -32, 24]


def test_jacobi_identity_on_series():
    prec = 200
    assert theta4_qexp(3, prec) == theta4_qexp(2, prec) + theta4_qexp(4, prec)


def test_delta_product():
    delta = delta_qexp(10)
    assert coeffs(delta, 4, start=2) == [1, -24, 252, -1472]
    order = series_vanishing_order(delta)
    assert order.exponent == 1
    assert order.leading == 1


def test_delta_matches_eisenstein_combination():
    prec = 60
    e4, e6 = eisenstein_qexp(4, prec), eisenstein_qexp(6, prec)
    assert (e4 ** 3 - e6 ** 2).scale(Fraction(1, 1728)) == delta_qexp(prec)


def test_product_precision_uses_orders():
    a = QSeries({2: 1}, 10)  # q + O(q^5)
    b = QSeries({0: 1, 1: 3}, 6)
    assert (a * b).prec == min(10 + 0, 6 + 2)


def test_coefficient_beyond_precision():
    with pytest.raises(PrecisionError):
        QSeries({0: 1}, 4).coefficient(4)


def test_inverse_of_unit_series():
    a = QSeries({0: 1, 2: -1}, 12)
    assert a * series_inverse(a) == QSeries.constant(1, 12)
    assert a ** -1 == series_inverse(a)


def test_inverse_of_non_unit_fails():
    with pytest.raises(PrecisionError):
        QSeries({2: 1}, 8).inverse()


def test_derivative_scales_by_exponent():
    e4 = eisenstein_qexp(4, 8)
    assert coeffs(series_D(e4), 3) == [0, 240, 4320]


def test_reindex():
    a = QSeries({0: 1, 2: 5}, 4)
    b = series_reindex(a, 3)
    assert b.coefficient(6) == 5
    assert b.prec == 12


def test_eval_at_i():
    e6 = series_eval(eisenstein_qexp(6, 120), 1)
    assert abs(e6.value) < mpmath.mpf(10) ** -30
    assert not e6.flagged
    e2 = series_eval(eisenstein_qexp(2, 120), 1)
    assert abs(e2.value - 3 / mpmath.pi) < mpmath.mpf(10) ** -30


def test_eval_tail_is_flagged_or_raises():
    short = eisenstein_qexp(4, 4)
    assert series_eval(short, "0.1").flagged
    with pytest.raises(PrecisionError):
        series_eval(short, "0.1", strict=True)


def test_eval_tail_sits_at_the_truncation_boundary():
    # E4 to q^(3/2): last stored term 240q, pushed to index 3
    result = series_eval(eisenstein_qexp(4, 4), 1)
    assert abs(result.tail - 240 * mpmath.exp(-3 * mpmath.pi)) < mpmath.mpf(10) ** -40
    exact = series_eval(QSeries.constant(1, 240), "0.5")
    assert exact.value == 1
    assert not exact.flagged


def test_eval_rejects_nonpositive_t():
    with pytest.raises(DomainError):
        series_eval(eisenstein_qexp(4, 4), 0)


def test_multiplication_is_commutative_and_associative(random_series):
    for _ in range(10):
        a, b, c = random_series(), random_series(), random_series(12)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


def test_D_is_a_derivation(random_series):
    for _ in range(10):
        a, b = random_series(), random_series()
        assert series_D(a * b) == series_D(a) * b + a * series_D(b)

# tests/qm1/test_level1.py
from fractions import Fraction

import pytest

from qmcert.core.exceptions import InhomogeneousError
from qmcert.domains.qm1 import DELTA, E2, E4, E6, QmPoly1, qm1_serre, qm1_serre_iter, qm1_to_qexp, weight_depth
from qmcert.domains.qseries import delta_qexp, eisenstein_qexp, series_D


def test_ramanujan_system():
    assert E2.derivative() == (E2 * E2 - E4) / 12
    assert E4.derivative() == (E2 * E4 - E6) / 3
    assert E6.derivative() == (E2 * E6 - E4 * E4) / 2


def test_derivative_agrees_with_expansion(prec):
    for k, gen in ((2, E2), (4, E4), (6, E6)):
        assert qm1_to_qexp(gen.derivative(), prec) == series_D(eisenstein_qexp(k, prec))


def test_leibniz_rule():
    f, g = E2 * E4 - E6, E4 * E4 + E2 * E6
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


def test_serre_derivative_of_eisenstein():
    assert qm1_serre(E4, 4) == -E6 / 3
    assert qm1_serre(E6, 6) == -(E4 * E4) / 2
    assert qm1_serre(DELTA, 12).is_zero()


def test_serre_iterate_steps_weight():
    # ∂_6 ∂_4 E4 = -∂_6 E6 / 3
    assert qm1_serre_iter(E4, 4, 2) == E4 * E4 / 6
    assert qm1_serre_iter(E4, 4, 0) == E4
    with pytest.raises(ValueError):
        qm1_serre_iter(E4, 4, -1)


def test_weight_and_depth():
    wd = weight_depth(E2 * E2 * E4 - E6 * E2)
    assert (wd.weight, wd.depth) == (8, 2)
    mixed = weight_depth(E2 + E4)
    assert mixed.weight is None
    assert not mixed.homogeneous
    with pytest.raises(InhomogeneousError):
        weight_depth(QmPoly1.zero())
    with pytest.raises(InhomogeneousError):
        (E2 + E4).weight


def test_delta_expansion(prec):
    assert qm1_to_qexp(DELTA, prec) == delta_qexp(prec)


def test_arithmetic_with_rationals():
    half = E4 * Fraction(1, 2)
    assert half + half == E4
    assert (E4 - E4).is_zero()
    assert str(E2 * E4 / 720 - E6 / 720) == "-1/720*E6 + 1/720*E2*E4"


def test_serre_product_rule():
    f, g = E2 * E4 - E6, E4 * E4
    assert (f * g).serre(14) == f.serre(6) * g + f * g.serre(8)


def test_leibniz_and_serre_product_rule_on_random_pairs(random_poly, rng):
    for _ in range(8):
        f, g = random_poly(QmPoly1), random_poly(QmPoly1)
        assert (f * g).derivative() == f.derivative() * g + f * g.derivative()
        k, l = rng.randint(0, 12), rng.randint(0, 12)
        assert (f * g).serre(k + l) == f.serre(k) * g + f * g.serre(l)


def test_serre_at_weight_minus_depth_keeps_depth(random_poly):
    for w in (6, 8, 12, 16):
        for _ in range(4):
            f = random_poly(QmPoly1, weight=w, terms=6)
            s = f.depth()
            assert f.serre(w - s).depth() <= s
    # any other weight raises the depth
    assert (E2 * E4 - E6).serre(6).depth() == 2


def test_qexp_is_a_ring_morphism(random_poly, prec):
    for _ in range(5):
        f, g = random_poly(QmPoly1), random_poly(QmPoly1)
        product = qm1_to_qexp(f, prec) * qm1_to_qexp(g, prec)
        assert qm1_to_qexp(f * g, prec) == product.truncate(prec)

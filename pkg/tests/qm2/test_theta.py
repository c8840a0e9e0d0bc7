# tests/qm2/test_theta.py
import pytest

from qmcert.core.exceptions import DepthError, InhomogeneousError
from qmcert.domains.qm1 import entities as level1
from qmcert.domains.qm1 import qm1_to_qexp
from qmcert.domains.qm2 import (
    DELTA,
    E2,
    E4,
    E6,
    H2,
    H3,
    H4,
    QmPoly2,
    from_level1,
    qm2_serre,
    qm2_slash_S,
    qm2_slash_T,
    qm2_to_qexp,
    qm2_vanishing_order,
)
from qmcert.domains.qseries import delta_qexp, eisenstein_qexp, series_D, theta4_qexp


def test_eisenstein_in_thetanull_basis(prec):
    assert qm2_to_qexp(E4, prec) == eisenstein_qexp(4, prec)
    assert qm2_to_qexp(E6, prec) == eisenstein_qexp(6, prec)
    assert qm2_to_qexp(DELTA, prec) == delta_qexp(prec)


def test_from_level1():
    assert from_level1(level1.E4) == E4
    assert from_level1(level1.E2 * level1.E6) == E2 * E6
    assert from_level1(level1.DELTA) == DELTA


def test_derivation_agrees_with_expansion(prec):
    for gen, j in ((H2, 2), (H4, 4)):
        assert qm2_to_qexp(gen.derivative(), prec) == series_D(theta4_qexp(j, prec))


def test_h3_expansion(prec):
    assert qm2_to_qexp(H3, prec) == theta4_qexp(3, prec)


def test_serre_on_thetanulls():
    # ∂_2 H2 = (H2^2 + 2 H2 H4)/6
    assert qm2_serre(H2, 2) == (H2 * H2 + 2 * H2 * H4) / 6
    assert qm2_serre(DELTA, 12).is_zero()


def test_slash_S_and_T():
    assert qm2_slash_S(H2) == -H4
    assert qm2_slash_S(H4) == -H2
    assert qm2_slash_T(H2) == -H2
    assert qm2_slash_T(H4) == H3
    for form in (E4, E6):
        assert qm2_slash_S(form) == form
        assert qm2_slash_T(form) == form


def test_slash_is_an_involution_on_g8(d8):
    assert qm2_slash_S(qm2_slash_S(d8.G)) == d8.G


def test_slash_needs_modular_input():
    with pytest.raises(DepthError):
        qm2_slash_S(E2 * H2)
    with pytest.raises(InhomogeneousError):
        qm2_slash_T(H2 + H2 * H4)


def test_vanishing_order_of_h2():
    order = qm2_vanishing_order(H2 ** 3, 10)
    assert order.exponent == 3 / 2
    assert order.leading == 16 ** 3


def test_leibniz_and_serre_product_rule_on_random_pairs(random_poly, rng):
    for _ in range(6):
        f, g = random_poly(QmPoly2), random_poly(QmPoly2)
        assert (f * g).derivative() == f.derivative() * g + f * g.derivative()
        k, l = rng.randint(0, 10), rng.randint(0, 10)
        assert qm2_serre(f * g, k + l) == qm2_serre(f, k) * g + f * qm2_serre(g, l)


def test_serre_at_weight_minus_depth_keeps_depth(random_poly):
    for w in (4, 6, 8):
        for _ in range(4):
            f = random_poly(QmPoly2, weight=w, terms=5)
            s = f.depth()
            assert qm2_serre(f, w - s).depth() <= s


def test_from_level1_commutes_with_D_and_expansion(random_poly, prec):
    for _ in range(5):
        p = random_poly(level1.QmPoly1)
        assert from_level1(p.derivative()) == from_level1(p).derivative()
        assert qm2_to_qexp(from_level1(p), prec) == qm1_to_qexp(p, prec)


def test_qexp_is_a_ring_morphism(random_poly, prec):
    for _ in range(4):
        f, g = random_poly(QmPoly2), random_poly(QmPoly2)
        product = qm2_to_qexp(f, prec) * qm2_to_qexp(g, prec)
        assert qm2_to_qexp(f * g, prec) == product.truncate(prec)

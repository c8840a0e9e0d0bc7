# qmcert/domains/certify/harder.py
"""
Reduction chain for the sharper 24-dimensional bound
432/π² − F/G > 725760·(Δ/G)·(1/(πt³) − 10/(3π²t²)) on 0 < t < 3π/10.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Optional, Tuple

import mpmath

from qmcert.core.config import settings
from qmcert.domains.certify.entities import f24, g24
from qmcert.domains.certify.service import (
    check_identity,
    complete_positivity_scan,
    log_grid,
    scan,
)
from qmcert.domains.extremal.service import X
from qmcert.domains.qm1 import entities as level1
from qmcert.domains.qm1.service import qm1_to_qexp
from qmcert.domains.qm2 import entities as theta
from qmcert.domains.qseries.service import eisenstein_qexp, series_eval
from qmcert.domains.rqm.entities import RqmElem
from qmcert.domains.rqm.service import as_rqm, axis_eval, rqm_flip, rqm_serre, rqm_slash_S
from qmcert.shared.schemas.certificate import Certificate, CertificateKind, Verdict
from qmcert.shared.utils.arith import sigma
from qmcert.shared.utils.logger import get_logger

logger = get_logger(__name__)

HARDER_CONST = 725760
BOUNDARY_T = 3 * mpmath.pi / 10


def _pt(level: int) -> Tuple[RqmElem, RqmElem]:
    return RqmElem.P(level), RqmElem.T(1, level)


def bracket_a(level: int = 2) -> RqmElem:
    P, T = _pt(level)
    return P * T ** 3 - P ** 2 * T ** 2 * Fraction(10, 3)


def bracket_b(level: int = 2) -> RqmElem:
    P, T = _pt(level)
    return P ** 2 * T ** 4 * Fraction(3, 2) - P ** 3 * T ** 3 * Fraction(10, 3)


@lru_cache(maxsize=1)
def harder_bracket() -> RqmElem:
    """(∂₁₂G)·a − G·b, which ∂₁₈ maps to G times an explicit quasimodular polynomial."""
    G = g24()
    return as_rqm(G.serre(12)) * bracket_a() - as_rqm(G) * bracket_b()


@lru_cache(maxsize=1)
def harder_numerator() -> RqmElem:
    """G·g(t): 432P²G − F − 725760·Δ·a."""
    P, _ = _pt(2)
    return (
        P ** 2 * as_rqm(g24()) * 432
        - as_rqm(f24())
        - RqmElem.from_poly(theta.DELTA) * bracket_a() * HARDER_CONST
    )


@lru_cache(maxsize=1)
def h_form() -> RqmElem:
    e2, e4 = level1.E2, level1.E4
    P, T = _pt(1)
    return (
        RqmElem.from_poly(X(8, 2) * 7560)
        - bracket_a(1) * ((37 * e4 - e2 ** 2) / 24)
        - (P ** 2 * T ** 4 * Fraction(3, 4) - P ** 3 * T ** 3 * Fraction(5, 3)) * e2
        + P ** 3 * T ** 5 * 3
        - P ** 4 * T ** 4 * 5
    )


def check_bracket_identities() -> List[Certificate]:
    G = as_rqm(g24())
    e2, e4 = theta.E2, theta.E4
    P, T = _pt(2)
    Y = harder_bracket()
    rhs = G * (
        bracket_a() * ((37 * e4 - e2 ** 2) / 24)
        + bracket_b() * (e2 / 2)
        - (P ** 3 * T ** 5 * 3 - P ** 4 * T ** 4 * 5)
    )
    delta = RqmElem.from_poly(theta.DELTA)
    return [
        check_identity("S18", rqm_serre(Y, 18), rhs),
        check_identity("S18-delta", rqm_serre(delta * Y, 30), delta * rqm_serre(Y, 18), anchor="serredisc2"),
    ]


def check_htinv() -> List[Certificate]:
    e2, e4, e6 = level1.E2, level1.E4, level1.E6
    P, T = _pt(1)
    x82 = RqmElem.from_poly(X(8, 2) * 7560)
    expected = (
        x82
        + P * T * ((7 * e2 * e4 - e6) / 4 - (37 * e4 - e2 ** 2) / 24)
        + P ** 2 * T ** 2 * (-(4 * e4 + 5 * e2 ** 2) / 36 + e2 / 4)
    )
    slashed = x82 + P * T * ((7 * e2 * e4 - e6) / 4) - P ** 2 * T ** 2 * (e4 * Fraction(21, 4))
    return [
        check_identity("htinv", T ** 8 * rqm_flip(h_form()), expected),
        check_identity("x82|S", rqm_slash_S(X(8, 2) * 7560), slashed, anchor="htinv"),
    ]


# closed-form q-coefficients, n >= 1
J_FORMS: List[Tuple[str, Callable, Callable[[int], Fraction]]] = [
    (
        "J1",
        lambda: level1.E2 ** 2 * Fraction(5, 36) + level1.E4 / 9 - level1.E2 / 4,
        lambda n: Fraction(60 * sigma(3, n) - 40 * n * sigma(1, n) + 6 * sigma(1, n)),
    ),
    (
        "J2",
        lambda: level1.E2 - level1.E6,
        lambda n: Fraction(504 * sigma(5, n) - 24 * sigma(1, n)),
    ),
    (
        "J3",
        lambda: level1.E2 * level1.E4 - level1.E6 / 10 - level1.E4 * Fraction(9, 10),
        lambda n: 720 * n * sigma(3, n) - Fraction(2268, 5) * sigma(5, n) - 216 * sigma(3, n),
    ),
]


def check_coefficient_formulas(order: int) -> List[Certificate]:
    certs = []
    for name, build, formula in J_FORMS:
        series = qm1_to_qexp(build(), 2 * order + 1)
        expected = [Fraction(0)] + [formula(n) for n in range(1, order + 1)]
        mismatches = [
            {"n": n, "series": series.coefficient(2 * n), "formula": c}
            for n, c in enumerate(expected)
            if series.coefficient(2 * n) != c
        ]
        certs.append(
            Certificate(
                name=f"{name}-coefficients",
                kind=CertificateKind.EXACT_IDENTITY,
                verdict=Verdict.FAIL if mismatches else Verdict.PASS,
                anchor="auxineq",
                evidence={"order": order, "a1": series.coefficient(2), "mismatches": mismatches[:5]},
            )
        )
    return certs


def check_divisor_bounds(order: int) -> Certificate:
    broken = []
    for n in range(1, order + 1):
        s1, s3 = sigma(1, n), sigma(3, n)
        if s3 < n ** 3 or s1 > n ** 2 or (n >= 2 and 16 * n * s3 > 9 * n ** 5):
            broken.append(n)
    return Certificate(
        name="divisor-bounds",
        kind=CertificateKind.CLOSED_FORM_BOUND,
        verdict=Verdict.FAIL if broken else Verdict.PASS,
        anchor="auxineq",
        evidence={"order": order, "bounds": ["sigma3(n) >= n^3", "sigma1(n) <= n^2", "n*sigma3(n) <= 9n^5/16"], "broken": broken[:10]},
    )


def check_j3(order: int) -> List[Certificate]:
    """a₁ > 0 and aₙ < 0 afterwards make e^{2πt}J₃(it) increasing; J₃(i) > 0 anchors it."""
    _, build, formula = J_FORMS[2]
    a1 = formula(1)
    positive_tail = [n for n in range(2, order + 1) if formula(n) >= 0]
    signs = Certificate(
        name="J3-signs",
        kind=CertificateKind.CLOSED_FORM_BOUND,
        verdict=Verdict.PASS if a1 > 0 and not positive_tail else Verdict.FAIL,
        anchor="auxineq",
        evidence={"a1": a1, "order": order, "nonnegative_after_first": positive_tail[:10]},
    )
    value = series_eval(qm1_to_qexp(build(), settings.DEFAULT_PREC), 1).value
    e4 = series_eval(eisenstein_qexp(4, settings.DEFAULT_PREC), 1).value
    target = (3 / mpmath.pi - mpmath.mpf(9) / 10) * e4
    ok = value > 0 and abs(value - target) < mpmath.mpf(10) ** -20
    at_i = Certificate(
        name="J3(i)",
        kind=CertificateKind.NUMERIC_SCAN,
        verdict=Verdict.PASS if ok else Verdict.FAIL,
        evidence={"value": value, "target": target},
    )
    return [signs, at_i]


def check_delta_bound(points=(0.25, 0.5, 1, 2, 4)) -> Certificate:
    """Δ(it) = e^{−2πt}·Π(1 − e^{−2πnt})²⁴ and every factor lies in (0, 1)."""
    delta = RqmElem.from_poly(theta.DELTA)
    samples = []
    for t in points:
        t = mpmath.mpf(t)
        ratio = axis_eval(delta, t).value * mpmath.exp(2 * mpmath.pi * t)
        samples.append({"t": t, "delta_times_exp": ratio})
    ok = all(0 < s["delta_times_exp"] < 1 for s in samples)
    return Certificate(
        name="delta-bound",
        kind=CertificateKind.CLOSED_FORM_BOUND,
        verdict=Verdict.PASS if ok else Verdict.FAIL,
        evidence={"structure": "product of factors in (0, 1)", "spot_checks": samples},
    )


def g_value(t) -> mpmath.mpf:
    return axis_eval(harder_numerator(), t).value / axis_eval(g24(), t).value


def check_g(points: Optional[int] = None) -> List[Certificate]:
    grid = log_grid(mpmath.mpf("0.01"), BOUNDARY_T * (1 - mpmath.mpf(10) ** -3), points)
    numerator = harder_numerator()

    def sample(t):
        v = axis_eval(numerator, t)
        return v.value, mpmath.mpf(0), v.magnitude

    positive = scan("g-positive", sample, grid, settings.SCAN_TOL, anchor="d24harder")
    values = [g_value(t) for t in grid]
    drops = [{"t": grid[i + 1], "g": values[i + 1]} for i in range(len(values) - 1) if not values[i + 1] > values[i]]
    increasing = Certificate(
        name="g-increasing",
        kind=CertificateKind.NUMERIC_SCAN,
        verdict=Verdict.FAIL if drops else Verdict.PASS,
        anchor="d24harder",
        evidence={"points": len(grid), "first": values[0], "last": values[-1], "drops": drops[:10]},
    )
    return [positive, increasing]


def check_boundary() -> Certificate:
    """At t = 3π/10 the factor a vanishes, leaving −G·5000/(81π⁶)."""
    value = axis_eval(harder_bracket(), BOUNDARY_T).value
    target = -axis_eval(g24(), BOUNDARY_T).value * 5000 / (81 * mpmath.pi ** 6)
    ok = value < 0 and abs(value - target) <= abs(target) * mpmath.mpf(10) ** -20
    return Certificate(
        name="boundary",
        kind=CertificateKind.NUMERIC_SCAN,
        verdict=Verdict.PASS if ok else Verdict.FAIL,
        anchor="d24harder",
        evidence={"t": BOUNDARY_T, "value": value, "target": target},
    )


def harder_inequality_suite(order: Optional[int] = None) -> List[Certificate]:
    order = settings.SCAN_ORDER if order is None else order
    certs: List[Certificate] = []
    certs += check_bracket_identities()
    certs += check_htinv()
    certs += check_coefficient_formulas(order)
    certs.append(check_divisor_bounds(order))
    for name, build, _ in J_FORMS[:2]:
        certs.append(complete_positivity_scan(build(), order, name=f"{name}-positivity", anchor="auxineq"))
    certs += check_j3(order)
    certs.append(check_delta_bound())
    certs += check_g()
    certs.append(check_boundary())
    logger.info("harder inequality chain: %s certificates", len(certs))
    return certs

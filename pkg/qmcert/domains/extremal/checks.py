# qmcert/domains/extremal/checks.py
from fractions import Fraction
from typing import List

from qmcert.core.exceptions import DomainError
from qmcert.domains.extremal.service import X, extremal
from qmcert.domains.extremal.tables import EXTREMAL_TABLE
from qmcert.domains.qm1.entities import DELTA, E2, E4, E6
from qmcert.domains.qm1.service import qm1_to_qexp
from qmcert.domains.qseries.entities import QSeries
from qmcert.shared.schemas.certificate import Certificate, CertificateKind, Verdict
from qmcert.shared.utils.logger import get_logger

logger = get_logger(__name__)


def check_ode_depth1(w: int) -> Certificate:
    """∂_{w−1}²X_w − ((w²−1)/144)·E4·X_w = 0."""
    if w % 6:
        raise DomainError(f"depth-1 ODE is stated for 6 | w, got {w}")
    x = X(w, 1)
    residual = x.serre_iter(w - 1, 2) - E4 * x * Fraction(w * w - 1, 144)
    return Certificate.from_residual(f"oded1serre[w={w}]", residual, weight=w)


def check_ode_depth1_expanded(w: int) -> Certificate:
    """X'' − (w/6)E2X' + (w(w−1)/144)(E2² − E4)X = 0."""
    if w % 6:
        raise DomainError(f"depth-1 ODE is stated for 6 | w, got {w}")
    x = X(w, 1)
    dx = x.derivative()
    residual = (
        dx.derivative()
        - E2 * dx * Fraction(w, 6)
        + (E2 * E2 - E4) * x * Fraction(w * (w - 1), 144)
    )
    return Certificate.from_residual(f"oded1[w={w}]", residual, weight=w)


def check_ode_depth2(w: int) -> Certificate:
    """X''' − (w/4)E2X'' + (w(w−1)/4)E2'X' − (w(w−1)(w−2)/24)E2''X = 0."""
    if w % 4:
        raise DomainError(f"depth-2 ODE is stated for 4 | w, got {w}")
    x = X(w, 2)
    d1 = x.derivative()
    d2 = d1.derivative()
    d3 = d2.derivative()
    e2p = E2.derivative()
    e2pp = e2p.derivative()
    residual = (
        d3
        - E2 * d2 * Fraction(w, 4)
        + e2p * d1 * Fraction(w * (w - 1), 4)
        - e2pp * x * Fraction(w * (w - 1) * (w - 2), 24)
    )
    return Certificate.from_residual(f"d2ode2[w={w}]", residual, weight=w)


def check_kkd1_recurrences(w_max: int) -> List[Certificate]:
    """Derivative relations among depth-1 extremal forms for 6 | w ≤ w_max.

    kkd1eq2 carries 7w/72 on X8·X_{w−4}; the leading q-coefficient of both
    sides fixes that value.
    """
    if w_max < 12 or w_max % 6:
        raise DomainError(f"w_max must be a multiple of 6 and >= 12, got {w_max}")
    x6, x8, x10 = X(6, 1), X(8, 1), X(10, 1)
    certs: List[Certificate] = []
    for w in range(6, w_max + 1, 6):
        residual = X(w + 4, 1) - X(w + 2, 1).serre(w + 1) * Fraction(12, w - 1)
        certs.append(Certificate.from_residual(f"d1rec2serre[w={w}]", residual))
    certs.append(
        Certificate.from_residual(
            "kkd1eq3[w=6]",
            x10.derivative() - x6 * x6 * 240 - E4 * x6.derivative(),
            form="degenerate",
        )
    )
    for w in range(12, w_max + 1, 6):
        a, b = Fraction(5 * w, 72), Fraction(7 * w, 72)
        eq1 = X(w, 1).derivative() - x6 * X(w - 4, 1) * a - x8 * X(w - 6, 1) * b
        eq2 = X(w + 2, 1).derivative() - x6 * X(w - 2, 1) * a - x8 * X(w - 4, 1) * b
        eq3 = (
            X(w + 4, 1).derivative()
            - x6 * X(w, 1) * 240
            - x8 * X(w - 2, 1) * b
            - x10 * X(w - 4, 1) * a
        )
        certs.append(Certificate.from_residual(f"kkd1eq1[w={w}]", eq1))
        certs.append(Certificate.from_residual(f"kkd1eq2[w={w}]", eq2))
        certs.append(Certificate.from_residual(f"kkd1eq3[w={w}]", eq3))
    logger.info("kkd1 relations checked up to weight %s", w_max)
    return certs


def check_depth1_recurrence_forms(w: int) -> List[Certificate]:
    """The three weight-raising recurrences, including both forms of the step by 6."""
    if w % 6:
        raise DomainError(f"depth-1 recurrences are stated for 6 | w, got {w}")
    xw, x2 = X(w, 1), X(w + 2, 1)
    rec1 = x2 - xw.serre(w - 1) * Fraction(12, w + 1)
    rec2 = X(w + 4, 1) - E4 * xw
    rec3 = X(w + 6, 1) - (E4 * x2 - E6 * xw) * Fraction(w + 6, 864 * (w + 5))
    rec3_alt = X(w + 6, 1) - (
        E4 * xw.serre(w - 1) - E6 * xw * Fraction(w + 1, 12)
    ) * Fraction(w + 6, 72 * (w + 1) * (w + 5))
    return [
        Certificate.from_residual(f"d1rec1[w={w}]", rec1),
        Certificate.from_residual(f"d1rec2[w={w}]", rec2),
        Certificate.from_residual(f"d1rec3[w={w}]", rec3),
        Certificate.from_residual(f"d1rec3-serre-form[w={w}]", rec3_alt, anchor="d1rec3"),
    ]


def check_depth2_chain(w: int) -> List[Certificate]:
    """Depth-2 recurrences starting at a weight divisible by 4."""
    if w % 4 or w < 4:
        raise DomainError(f"depth-2 chain starts at 4 | w, got {w}")
    x = X(w, 2)
    const = Fraction(3 * (w + 4) ** 2, 16 * (w + 1) * (w + 2) ** 2 * (w + 3))
    eq1 = X(w + 4, 2) - (E4 * x * Fraction(w * (w + 1), 36) - x.serre_iter(w - 2, 2)) * const
    certs = [Certificate.from_residual(f"d2eq1[w={w}]", eq1)]
    if w != 4:
        eq2 = X(w + 2, 2) - x.serre(w - 2) * Fraction(6, w + 1)
        certs.append(Certificate.from_residual(f"d2eq2[w={w}]", eq2))
    if w >= 12:
        y = X(w - 2, 2)
        const3 = Fraction(3 * w * w, 16 * (w * w - 1) * (w - 6) ** 2)
        eq3 = X(w + 2, 2) - (
            E4 * y * Fraction((w - 4) * (w - 5), 36) - y.serre_iter(w - 4, 2)
        ) * const3
        certs.append(Certificate.from_residual(f"d2eq3[w={w}]", eq3))
    return certs


def check_depth2_exceptional() -> List[Certificate]:
    x42, x61, x81, x121 = X(4, 2), X(6, 1), X(8, 1), X(12, 1)
    x82 = X(8, 2)
    lhs = x82.derivative()
    rhs = x42 * x61 * 2
    head = qm1_to_qexp(lhs, 7)
    cross = Certificate.from_residual(
        "dx82-leading",
        head - qm1_to_qexp(rhs, 7),
        leading=[head.coefficient(4), head.coefficient(6)],
    )
    return [
        Certificate.from_residual("dx82", lhs - rhs),
        Certificate.from_residual(
            "dx102",
            X(10, 2).derivative() - x42 * x81 * Fraction(8, 9) - x61 * x61 * Fraction(10, 9),
        ),
        Certificate.from_residual("dx122", X(12, 2).derivative() - x61 * x82 * 3),
        Certificate.from_residual("dx142", X(14, 2).derivative() - x42 * x121 * 3),
        cross,
    ]


def check_lowpos() -> List[Certificate]:
    return [
        Certificate.from_residual("lowpos-X42", X(4, 2) + E2.derivative() / 24),
        Certificate.from_residual("lowpos-X61", X(6, 1) - E4.derivative() / 240),
        Certificate.from_residual("lowpos-X81", X(8, 1) + E6.derivative() / 504),
    ]


def check_auxidentity() -> Certificate:
    x61, x81 = X(6, 1), X(8, 1)
    residual = x81 * x81 * Fraction(49, 24) - E4 * x61 * x61 * Fraction(25, 24) - DELTA * X(4, 2)
    return Certificate.from_residual("auxidentity", residual)


def check_x121() -> Certificate:
    residual = X(12, 1) - (E4 * X(8, 1) - E6 * X(6, 1)) / (72 * 11)
    return Certificate.from_residual("x121", residual)


def extremal_table() -> List[Certificate]:
    """Closed forms and printed coefficients of the tabulated extremal forms."""
    certs: List[Certificate] = []
    for row in EXTREMAL_TABLE:
        form = extremal(row.weight, row.depth)
        closed = form.poly - row.closed_form
        start = form.expected_order
        prec = 2 * (start + len(row.coefficients))
        series = qm1_to_qexp(form.poly, prec)
        expected = QSeries(
            {2 * (start + i): c for i, c in enumerate(row.coefficients)},
            prec,
        )
        mismatch = series - expected
        ok = closed.is_zero() and mismatch.is_zero() and form.recurrence_scale == 1
        evidence = {
            "closed_form": str(row.closed_form),
            "coefficients": [series.coefficient(2 * (start + i)) for i in range(len(row.coefficients))],
            "recurrence_scale": form.recurrence_scale,
        }
        if not closed.is_zero():
            evidence["residual"] = str(closed)
        certs.append(
            Certificate(
                name=f"table[{form.label}]",
                kind=CertificateKind.EXACT_IDENTITY,
                verdict=Verdict.PASS if ok else Verdict.FAIL,
                anchor="extremal-table",
                evidence=evidence,
            )
        )
    return certs

# qmcert/domains/certify/suites.py
"""
Named certificate suites.
- d8, d24: the differential identities, monotonicity, limit and inequality scans per dimension
- extremal: construction, recurrences, ODEs and positivity of extremal forms
- appendix: derivative rules, theta relations, Serre-derivative product rules, S-equivariance
- harder: the reduction chain of the sharper 24-dimensional bound
"""

from fractions import Fraction
from typing import Callable, Dict, List, Sequence, Union

from qmcert.core.config import settings
from qmcert.core.exceptions import QmCertError
from qmcert.domains.certify.entities import d8_pair, d24_pair, f24, g24
from qmcert.domains.certify.harder import harder_inequality_suite
from qmcert.domains.certify.service import (
    check_identity,
    complete_positivity_scan,
    derivative_positivity_check,
    inequality_scan,
    level_increase_check,
    limit_check,
    monotonicity_certificate,
    serre_bracket,
    special_values_check,
)
from qmcert.domains.extremal import (
    X,
    check_auxidentity,
    check_depth1_recurrence_forms,
    check_depth2_chain,
    check_depth2_exceptional,
    check_kkd1_recurrences,
    check_lowpos,
    check_ode_depth1,
    check_ode_depth1_expanded,
    check_ode_depth2,
    check_x121,
    extremal_table,
)
from qmcert.domains.qm1 import entities as level1
from qmcert.domains.qm1.service import qm1_serre, qm1_to_qexp
from qmcert.domains.qm2 import entities as theta
from qmcert.domains.qm2.service import from_level1, qm2_slash_S, qm2_slash_T, qm2_to_qexp
from qmcert.domains.qseries.service import (
    delta_qexp,
    eisenstein_qexp,
    r4_count,
    r4_enumerate,
    series_D,
    theta4_qexp,
)
from qmcert.domains.rqm.entities import RqmElem
from qmcert.domains.rqm.service import rqm_serre, rqm_slash_S
from qmcert.shared.schemas.certificate import Certificate, CertificateKind, Verdict
from qmcert.shared.utils.logger import get_logger

logger = get_logger(__name__)

Check = Callable[[], Union[Certificate, List[Certificate]]]

QEXP_PREC = 201


# --- d8 ---


def _d8_checks() -> List[Certificate]:
    e2, e4, e6 = level1.E2, level1.E4, level1.E6
    h2, h4 = theta.H2, theta.H4
    pair = d8_pair()
    F, G = pair.F, pair.G
    F2 = from_level1(F)
    u = e2 * e4 - e6
    positive_factor = theta.E4 - theta.E2 * (h2 + 2 * h4) / 2
    return [
        check_identity("F8-extremal", F, X(6, 1) ** 2 * 720 ** 2),
        check_identity("d8-dF", F.serre(10), u * (e4 ** 2 - e2 * e6) * Fraction(5, 6)),
        check_identity("d8-dG", G.serre(10), h2 ** 3 * (h2 + 2 * h4) * theta.E4 * Fraction(5, 3)),
        check_identity("d8ssf", F.serre_iter(10, 2), e4 * F * Fraction(5, 6) + level1.DELTA * X(4, 2) * 172800),
        check_identity("d8ssg", G.serre_iter(10, 2), theta.E4 * G * Fraction(5, 6) - theta.DELTA * h2 * 640),
        check_identity(
            "d8ineqfactor",
            serre_bracket(pair),
            h2 ** 3 * (h2 + h4) ** 2 * h4 ** 2 * from_level1(u) * positive_factor * Fraction(15, 2),
        ),
        check_identity(
            "L10factor",
            from_level1(e4 ** 2 - e2 * e6) * (2 * h2 ** 2 + 5 * h2 * h4 + 5 * h4 ** 2)
            - from_level1(u * e4) * (h2 + 2 * h4) * 2,
            h4 ** 2 * (h2 + h4) ** 2 * positive_factor * 9,
        ),
        check_identity(
            "L10-positive-form",
            positive_factor,
            h2 ** 2 * Fraction(3, 4) + (h2 + 2 * h4) * (h2 + 2 * h4 - 2 * theta.E2) / 4,
            anchor="L10factor",
        ),
        complete_positivity_scan(positive_factor, 100, name="L10-positivity", anchor="L10factor"),
        complete_positivity_scan(F2, settings.SCAN_ORDER, name="F8-positivity"),
        monotonicity_certificate(pair),
        limit_check(pair),
        inequality_scan("d8ineq1"),
        inequality_scan("d8ineq2"),
    ]


# --- d24 ---

F24_LEADING = {3: 3657830400, 4: 138997555200, 5: 2567796940800}


def _f24_leading() -> Certificate:
    series = qm1_to_qexp(f24(), 12)
    found = {n: series.coefficient(2 * n) for n in F24_LEADING}
    ok = series.order == 6 and all(found[n] == c for n, c in F24_LEADING.items())
    return Certificate(
        name="F24-leading",
        kind=CertificateKind.EXACT_IDENTITY,
        verdict=Verdict.PASS if ok else Verdict.FAIL,
        anchor="F16pos",
        evidence={"coefficients": found, "expected": F24_LEADING},
    )


def _d24_checks() -> List[Certificate]:
    e2, e4, e6 = level1.E2, level1.E4, level1.E6
    pair = d24_pair()
    F, G = pair.F, pair.G
    return [
        check_identity(
            "F24-definition",
            F,
            (e2 ** 2 - e4) * (e4 ** 3 - e6 ** 2) * 49 + (e4 ** 2 - e2 * e6) ** 2 * 24,
        ),
        _f24_leading(),
        check_identity("F16eq1", F, (X(8, 1) ** 2 - level1.DELTA * X(4, 2)) * (2 * 7 ** 2 * 12 ** 5)),
        check_identity("serrederF16", F.serre(14), X(6, 1) * X(12, 1) * 6706022400),
        check_identity(
            "d24ssf",
            F.serre_iter(14, 2),
            e4 * F * Fraction(14, 9) + level1.DELTA * X(8, 2) * 5486745600,
        ),
        check_identity("d24ssg", G.serre_iter(14, 2), theta.E4 * G * Fraction(14, 9)),
        complete_positivity_scan(from_level1(F), settings.SCAN_ORDER, name="F24-positivity", anchor="F16pos"),
        monotonicity_certificate(pair),
        limit_check(pair),
        inequality_scan("d24ineq1"),
        inequality_scan("d24ineq2"),
        inequality_scan("d24ineq3"),
    ]


# --- extremal ---


def _extremal_checks() -> List[Certificate]:
    certs: List[Certificate] = list(extremal_table())
    for w in (6, 12, 18, 24):
        certs.append(check_ode_depth1(w))
        certs.append(check_ode_depth1_expanded(w))
        certs += check_depth1_recurrence_forms(w)
    certs += check_kkd1_recurrences(settings.KKD1_MAX_WEIGHT)
    for w in (4, 8, 12, 16):
        certs.append(check_ode_depth2(w))
        certs += check_depth2_chain(w)
    certs += check_depth2_exceptional()
    certs += check_lowpos()
    for w in range(6, settings.POSITIVITY_MAX_WEIGHT + 1, 2):
        certs.append(complete_positivity_scan(X(w, 1), settings.SCAN_ORDER, name=f"X({w},1)-positivity", anchor="kkd1pos"))
    for w in (4, 8, 10, 12, 14):
        certs.append(complete_positivity_scan(X(w, 2), settings.SCAN_ORDER, name=f"X({w},2)-positivity", anchor="d2extpos"))
    certs.append(derivative_positivity_check(X(6, 1)))
    certs.append(level_increase_check(X(4, 2)))
    return certs


# --- appendix ---


def _theta_product_rules(limit: int = 8) -> Certificate:
    """∂_{2a+2b}(H2^a·H4^b) = (1/6)·H2^a·H4^b·((a − 2b)H2 + (2a − b)H4)."""
    h2, h4 = theta.H2, theta.H4
    parts = []
    for a in range(limit + 1):
        for b in range(limit + 1):
            if a + b == 0:
                continue
            f = h2 ** a * h4 ** b
            rhs = f * ((a - 2 * b) * h2 + (2 * a - b) * h4) / 6
            parts.append(check_identity(f"thetaprodserreder[{a},{b}]", f.serre(2 * a + 2 * b), rhs))
    return Certificate.composite("thetaprodserreder", CertificateKind.EXACT_IDENTITY, parts)


def _qexp_cross_checks() -> List[Certificate]:
    prec = QEXP_PREC
    certs = []
    for name, gen in (("E2", level1.E2), ("E4", level1.E4), ("E6", level1.E6)):
        certs.append(
            check_identity(
                f"ramanujan-{name}",
                series_D(qm1_to_qexp(gen, prec)),
                qm1_to_qexp(gen.derivative(), prec),
                anchor="ramanujan",
            )
        )
    for name, gen in (("H2", theta.H2), ("H4", theta.H4)):
        certs.append(
            check_identity(
                f"jacobi-derivative-{name}",
                series_D(qm2_to_qexp(gen, prec)),
                qm2_to_qexp(gen.derivative(), prec),
                anchor="serre_jacobi",
            )
        )
    certs += [
        check_identity("e4theta", qm2_to_qexp(theta.E4, prec), eisenstein_qexp(4, prec)),
        check_identity("e6theta", qm2_to_qexp(theta.E6, prec), eisenstein_qexp(6, prec)),
        check_identity("disctheta", qm2_to_qexp(theta.DELTA, prec), delta_qexp(prec)),
        check_identity("eta-product", qm1_to_qexp(level1.DELTA, prec), delta_qexp(prec), anchor="disc"),
        check_identity("jacobi", theta4_qexp(3, 2 * prec), theta4_qexp(2, 2 * prec) + theta4_qexp(4, 2 * prec)),
    ]
    return certs


def _r4_check(n_max: int = 200) -> Certificate:
    mismatches = [n for n in range(n_max + 1) if r4_count(n) != r4_enumerate(n)]
    return Certificate(
        name="r4-formula",
        kind=CertificateKind.EXACT_IDENTITY,
        verdict=Verdict.FAIL if mismatches else Verdict.PASS,
        anchor="jacobi-four-squares",
        evidence={"n_max": n_max, "mismatches": mismatches},
    )


def _serre_rule_checks() -> List[Certificate]:
    e2, e4, e6 = level1.E2, level1.E4, level1.E6
    h2, h4 = theta.H2, theta.H4
    F = X(8, 2)
    w = 10
    return [
        check_identity("serre_eis-E2", e2.serre(1), -e4 / 12),
        check_identity("serre_eis-E4", e4.serre(4), -e6 / 3),
        check_identity("serre_eis-E6", e6.serre(6), -(e4 ** 2) / 2),
        check_identity("serre_jacobi-H2", h2.serre(2), h2 * (h2 + 2 * h4) / 6),
        check_identity("serre_jacobi-H4", h4.serre(2), -h4 * (2 * h2 + h4) / 6),
        check_identity("serre_jacobi-H3", theta.H3.serre(2), theta.H3 * (h2 - h4) / 6),
        check_identity("e2der", e2.serre(4), (-3 * e2 ** 2 - e4) / 12),
        check_identity("serredisc", level1.DELTA.serre(12), 0),
        check_identity("serredisc2", (level1.DELTA * F).serre(w + 12), level1.DELTA * F.serre(w)),
        check_identity("serre_e2", (e2 * F).serre(w), e2 * F.serre(w - 1) - e4 * F / 12),
        check_identity("serre_e4", (e4 * F).serre(w), e4 * F.serre(w - 4) - e6 * F / 3),
        check_identity("serre_e6", (e6 * F).serre(w), e6 * F.serre(w - 6) - e4 ** 2 * F / 2),
    ]


def _transformation_checks() -> List[Certificate]:
    certs = []
    for name, f in (
        ("E4", level1.E4),
        ("E2E4-E6", level1.E2 * level1.E4 - level1.E6),
        ("Delta", level1.DELTA),
        ("X(6,1)", X(6, 1)),
    ):
        k = f.weight
        certs.append(
            check_identity(f"S-equivariance[{name}]", rqm_serre(rqm_slash_S(f), k), rqm_slash_S(qm1_serre(f, k)))
        )
    G = g24()
    certs.append(check_identity("S-involution", qm2_slash_S(qm2_slash_S(G)), G))
    certs.append(check_identity("T-invariance[E4]", qm2_slash_T(theta.E4), theta.E4))
    certs.append(check_identity("S-invariance[E4]", qm2_slash_S(theta.E4), theta.E4))
    certs.append(
        check_identity("S[E2]", rqm_slash_S(level1.E2), level1.E2 - RqmElem.P() * RqmElem.T() * 6, anchor="e2trans")
    )
    return certs


def _appendix_checks() -> List[Certificate]:
    certs = _qexp_cross_checks()
    certs.append(_r4_check())
    certs += _serre_rule_checks()
    certs.append(_theta_product_rules())
    certs += _transformation_checks()
    certs.append(check_auxidentity())
    certs.append(check_x121())
    certs.append(special_values_check())
    return certs


SUITES: Dict[str, Sequence[Check]] = {
    "d8": (_d8_checks,),
    "d24": (_d24_checks, harder_inequality_suite),
    "extremal": (_extremal_checks,),
    "appendix": (_appendix_checks,),
    "harder": (harder_inequality_suite,),
}
# harder runs inside d24, so "all" leaves it out
ALL_SUITES = ("d8", "d24", "extremal", "appendix")
SUITE_NAMES = tuple(SUITES) + ("all",)


def _raised(check: Check, exc: Exception) -> Certificate:
    return Certificate(
        name=check.__name__.strip("_"),
        kind=CertificateKind.EXACT_IDENTITY,
        verdict=Verdict.FAIL,
        evidence={"error": str(exc), "type": type(exc).__name__},
    )


def _guarded(check: Check) -> List[Certificate]:
    try:
        out = check()
    except QmCertError as exc:
        logger.error("check %s raised: %s", check.__name__, exc)
        return [_raised(check, exc)]
    except Exception as exc:
        logger.exception("check %s crashed", check.__name__)
        return [_raised(check, exc)]
    return [out] if isinstance(out, Certificate) else list(out)


def run_suite(name: str) -> List[Certificate]:
    if name == "all":
        names = list(ALL_SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise QmCertError(f"unknown suite {name}; expected one of {', '.join(SUITE_NAMES)}")
    certs: List[Certificate] = []
    for suite in names:
        logger.info("running suite %s", suite)
        for check in SUITES[suite]:
            certs += _guarded(check)
    return certs

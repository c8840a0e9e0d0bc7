# qmcert/domains/certify/service.py
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import mpmath

from qmcert.core.config import settings
from qmcert.core.exceptions import DomainError, QmCertError, RingMismatchError
from qmcert.domains.certify.entities import IneqPair, ineq_pair
from qmcert.domains.qm1.entities import QmPoly1
from qmcert.domains.qm1.service import qm1_to_qexp
from qmcert.domains.qm2 import entities as theta
from qmcert.domains.qm2.entities import QmPoly2
from qmcert.domains.qm2.service import from_level1, qm2_to_qexp
from qmcert.domains.qseries.entities import QSeries
from qmcert.domains.qseries.service import (
    eisenstein_qexp,
    series_D,
    series_eval,
    series_reindex,
    series_vanishing_order,
)
from qmcert.domains.rqm.entities import RqmElem
from qmcert.domains.rqm.service import (
    as_rqm,
    axis_eval,
    rqm_eval,
    rqm_flip,
    rqm_leading_limit,
    rqm_slash_S,
)
from qmcert.shared.schemas.certificate import Certificate, CertificateKind, Verdict
from qmcert.shared.utils.logger import get_logger

logger = get_logger(__name__)

Expr = Union[QmPoly1, QmPoly2, RqmElem, QSeries, int, Fraction]

SCALARS = (int, Fraction)


# --- exact identities ---


def common_ring(lhs: Expr, rhs: Expr) -> Tuple[Expr, Expr]:
    """Promote both sides to the smallest ring holding them: QM1 -> QM2 -> QM[P, T]."""
    sides = (lhs, rhs)
    if any(isinstance(s, QSeries) for s in sides):
        if all(isinstance(s, QSeries) for s in sides):
            return lhs, rhs
        raise RingMismatchError("a q-series can only be compared with another q-series")
    for s in sides:
        if not isinstance(s, (QmPoly1, QmPoly2, RqmElem) + SCALARS):
            raise RingMismatchError(f"cannot compare values of type {type(s).__name__}")
    if any(isinstance(s, RqmElem) for s in sides):
        return as_rqm(lhs), as_rqm(rhs)
    if any(isinstance(s, QmPoly2) for s in sides):
        return tuple(_to_level2(s) for s in sides)  # type: ignore[return-value]
    return tuple(QmPoly1.constant(s) if isinstance(s, SCALARS) else s for s in sides)  # type: ignore[return-value]


def _to_level2(x) -> QmPoly2:
    if isinstance(x, QmPoly2):
        return x
    if isinstance(x, QmPoly1):
        return from_level1(x)
    return QmPoly2.constant(x)


def check_identity(name: str, lhs: Expr, rhs: Expr, anchor: str = "", **evidence) -> Certificate:
    """Exact identity lhs = rhs after promotion to a common ring."""
    a, b = common_ring(lhs, rhs)
    residual = a - b
    cert = Certificate.from_residual(name, residual, anchor, **evidence)
    if not cert.passed:
        logger.warning("identity %s failed", name)
    return cert


# --- coefficient certificates ---


def as_series(expr: Expr, order: int) -> QSeries:
    """q-expansion with every exponent up to q^order."""
    prec = 2 * order + 1
    if isinstance(expr, QSeries):
        return expr
    if isinstance(expr, QmPoly1):
        return qm1_to_qexp(expr, prec)
    if isinstance(expr, QmPoly2):
        return qm2_to_qexp(expr, prec)
    if isinstance(expr, RqmElem):
        groups = expr.components()
        if set(groups) - {(0, 0)}:
            raise DomainError("only elements free of P and T have q-expansions")
        base = groups.get((0, 0))
        return as_series(base, order) if base is not None else QSeries.zero(prec)
    raise DomainError(f"no q-expansion for {type(expr).__name__}")


def _first_negative(series: QSeries) -> Optional[Tuple[int, Fraction]]:
    for n, c in series.items():
        if c < 0:
            return n, c
    return None


def complete_positivity_scan(expr: Expr, order: int, name: str = "positivity", anchor: str = "") -> Certificate:
    """Every q-coefficient through q^order is nonnegative."""
    if order < 1:
        raise DomainError(f"order must be >= 1, got {order}")
    series = as_series(expr, order)
    negative = _first_negative(series)
    evidence: Dict[str, object] = {"order": order, "prec": series.prec}
    if negative is None:
        verdict = Verdict.PASS
        evidence["leading"] = series_vanishing_order(series).leading
    else:
        verdict = Verdict.FAIL
        index, coefficient = negative
        evidence["first_negative"] = {"exponent": Fraction(index, 2), "coefficient": coefficient}
    return Certificate(
        name=name,
        kind=CertificateKind.COEFFICIENT_POSITIVITY,
        verdict=verdict,
        anchor=anchor,
        evidence=evidence,
    )


def vanishing_order_compare(F: Expr, G: Expr, order: int = 8, name: str = "vanishing-order") -> Certificate:
    """ord F > ord G at the cusp with positive leading coefficients, so F'/F > G'/G for large t."""
    fo = series_vanishing_order(as_series(F, order))
    go = series_vanishing_order(as_series(G, order))
    evidence: Dict[str, object] = {
        "order_F": fo.exponent,
        "order_G": go.exponent,
        "leading_F": fo.leading,
        "leading_G": go.leading,
    }
    if not (fo.conclusive and go.conclusive):
        verdict = Verdict.INCONCLUSIVE
    elif fo.index > go.index and fo.leading > 0 and go.leading > 0:
        verdict = Verdict.PASS
    else:
        verdict = Verdict.FAIL
    return Certificate(name=name, kind=CertificateKind.VANISHING_ORDER, verdict=verdict, evidence=evidence)


def derivative_positivity_check(expr: Expr, order: Optional[int] = None) -> Certificate:
    """For a cusp form, the positivity verdicts of f and Df agree to the working order."""
    order = settings.SCAN_ORDER if order is None else order
    series = as_series(expr, order)
    if series.coefficient(0) != 0:
        return Certificate(
            name="derivative-positivity",
            kind=CertificateKind.COEFFICIENT_POSITIVITY,
            verdict=Verdict.INCONCLUSIVE,
            evidence={"reason": "not a cusp form", "constant_term": series.coefficient(0)},
        )
    base = complete_positivity_scan(series, order, name="f")
    derived = complete_positivity_scan(series_D(series), order, name="Df")
    agree = base.verdict == derived.verdict
    return Certificate(
        name="derivative-positivity",
        kind=CertificateKind.COEFFICIENT_POSITIVITY,
        verdict=Verdict.PASS if agree else Verdict.FAIL,
        evidence={"order": order, "f": base.verdict.value, "Df": derived.verdict.value},
        parts=[base, derived],
    )


def level_increase_check(expr: Expr, factors: Sequence[int] = (2, 3), order: Optional[int] = None) -> Certificate:
    """q -> q^N keeps every coefficient of a completely positive series nonnegative."""
    order = settings.SCAN_ORDER if order is None else order
    series = as_series(expr, order)
    source = complete_positivity_scan(series, order, name="source")
    parts = [source]
    for n in factors:
        parts.append(complete_positivity_scan(series_reindex(series, n), n * order, name=f"q->q^{n}"))
    if not source.passed:
        verdict = Verdict.INCONCLUSIVE
    else:
        verdict = Verdict.PASS if all(p.passed for p in parts) else Verdict.FAIL
    return Certificate(
        name="level-increase",
        kind=CertificateKind.COEFFICIENT_POSITIVITY,
        verdict=verdict,
        evidence={"factors": list(factors), "order": order},
        parts=parts,
    )


# --- the monotonicity argument ---


def serre_bracket(pair: IneqPair) -> QmPoly2:
    """L = (∂_k F)G − F(∂_k G) in the level-2 ring."""
    F, G = _to_level2(pair.F), _to_level2(pair.G)
    k = pair.serre_weight
    return F.serre(k) * G - F * G.serre(k)


def monotonicity_certificate(pair: IneqPair, order: int = 100) -> Certificate:
    """F/G strictly decreasing: bracket identity, bracket positivity and the cusp comparison."""
    k = pair.serre_weight
    L = serre_bracket(pair)
    identity = check_identity(
        f"{pair.name}-bracket",
        L.serre(2 * k + 2),
        theta.DELTA * pair.bracket,
        anchor=f"{pair.name}L",
        weight=L.weight + 2,
    )
    parts = [
        identity,
        complete_positivity_scan(pair.bracket, order, name=f"{pair.name}-bracket-positivity"),
        vanishing_order_compare(pair.F, pair.G, name=f"{pair.name}-vanishing-order"),
    ]
    cert = Certificate.composite(f"{pair.name}-decreasing", CertificateKind.MONOTONICITY, parts)
    logger.info("monotonicity of %s: %s", pair.name, cert.verdict.value)
    return cert


# --- limits and numerics ---


def limit_check(pair: IneqPair, t_large=None, tol=None) -> Certificate:
    """lim_{t→0+} F(it)/G(it) from the S-transforms, exactly and at z = i/t_large."""
    t_large = mpmath.mpf(settings.LIMIT_T if t_large is None else t_large)
    if t_large < 2:
        raise DomainError(f"t_large must be >= 2, got {t_large}")
    tol = pair.limit_tol if tol is None else tol
    F, G = as_rqm(pair.F), as_rqm(pair.G)
    parts = [
        check_identity(f"{pair.name}-F|S", rqm_slash_S(pair.F), pair.F_slash, anchor=f"{pair.name}limit"),
        check_identity(f"{pair.name}-G|S", rqm_slash_S(pair.G), pair.G_slash, anchor=f"{pair.name}limit"),
    ]
    # F(i/t)/G(i/t) as t -> ∞
    fF, fG = rqm_flip(F), rqm_flip(G)
    try:
        c, n = rqm_leading_limit(fF, fG)
        exact_ok = (c, n) == (pair.limit_const, pair.pi_power)
        parts.append(
            Certificate(
                name=f"{pair.name}-limit-exact",
                kind=CertificateKind.EXACT_IDENTITY,
                verdict=Verdict.PASS if exact_ok else Verdict.FAIL,
                anchor=f"{pair.name}limit",
                evidence={"limit": f"{c}/pi^{n}", "expected": f"{pair.limit_const}/pi^{pair.pi_power}"},
            )
        )
    except DomainError as exc:
        parts.append(
            Certificate(
                name=f"{pair.name}-limit-exact",
                kind=CertificateKind.EXACT_IDENTITY,
                verdict=Verdict.FAIL,
                evidence={"error": str(exc)},
            )
        )
    value = rqm_eval(fF, t_large).value / rqm_eval(fG, t_large).value
    target = mpmath.mpf(pair.limit_const.numerator) / pair.limit_const.denominator / mpmath.pi ** pair.pi_power
    distance = abs(value - target)
    parts.append(
        Certificate(
            name=f"{pair.name}-limit-numeric",
            kind=CertificateKind.NUMERIC_SCAN,
            verdict=Verdict.PASS if distance < tol else Verdict.FAIL,
            evidence={"t": t_large, "value": value, "target": target, "distance": distance, "tol": tol},
        )
    )
    return Certificate.composite(f"{pair.name}-limit", CertificateKind.EXACT_IDENTITY, parts, anchor=f"{pair.name}limit")


def log_grid(lo, hi, points: Optional[int] = None) -> List[mpmath.mpf]:
    points = settings.GRID_POINTS if points is None else points
    lo, hi = mpmath.mpf(lo), mpmath.mpf(hi)
    if points < 2 or not 0 < lo < hi:
        raise DomainError(f"bad grid [{lo}, {hi}] with {points} points")
    step = mpmath.log(hi / lo) / (points - 1)
    return [lo * mpmath.exp(step * i) for i in range(points)]


# A sample is (lhs, rhs, scale): the inequality lhs > rhs must hold with margin tol·scale.
Sample = Tuple[mpmath.mpf, mpmath.mpf, mpmath.mpf]


def _combination(pair: IneqPair, sign: int) -> RqmElem:
    """sign·F + c·P²·G, the numerator of sign·F/G + c/π² on the imaginary axis."""
    P = RqmElem.P(2)
    return as_rqm(pair.F) * sign + P ** pair.pi_power * as_rqm(pair.G) * pair.limit_const


def _positive_sampler(x: RqmElem) -> Callable[[mpmath.mpf], Sample]:
    def sample(t):
        v = axis_eval(x, t)
        return v.value, mpmath.mpf(0), v.magnitude

    return sample


def _d24ineq3_sampler() -> Callable[[mpmath.mpf], Sample]:
    pair = ineq_pair("d24")
    x = _combination(pair, -1)
    delta = RqmElem.from_poly(theta.DELTA)

    def sample(t):
        inner = axis_eval(x, 1 / t)
        d = axis_eval(delta, 1 / t).value
        growth = mpmath.exp(2 * mpmath.pi * t)
        lhs = t ** 10 * inner.value / d ** 2
        rhs = 725760 / mpmath.pi * growth * (t - 10 / (3 * mpmath.pi))
        # both sides share the e^{2πt} growth and cancel in lhs - rhs;
        # the margin is measured against their size with that factor removed
        size = t ** 10 * inner.magnitude / d ** 2 + abs(rhs)
        return lhs, rhs, size / growth

    return sample


INEQUALITIES: Dict[str, Tuple[Callable[[], Callable[[mpmath.mpf], Sample]], Tuple[float, float]]] = {
    "d8ineq1": (lambda: _positive_sampler(_combination(ineq_pair("d8"), 1)), (0.05, 10.0)),
    "d8ineq2": (lambda: _positive_sampler(_combination(ineq_pair("d8"), -1)), (0.05, 10.0)),
    "d24ineq1": (lambda: _positive_sampler(_combination(ineq_pair("d24"), 1)), (0.05, 10.0)),
    "d24ineq2": (lambda: _positive_sampler(_combination(ineq_pair("d24"), -1)), (0.05, 10.0)),
    "d24ineq3": (_d24ineq3_sampler, (1.0, 10.0)),
}


def scan(name: str, sampler: Callable[[mpmath.mpf], Sample], grid: Iterable, tol, anchor: str = "") -> Certificate:
    """Sanity scan of lhs > rhs over a grid; numeric evidence, never a proof."""
    tol = mpmath.mpf(tol)
    worst = None
    failures = []
    points = 0
    for t in grid:
        t = mpmath.mpf(t)
        points += 1
        try:
            lhs, rhs, scale = sampler(t)
        except QmCertError as exc:
            failures.append({"t": t, "error": str(exc)})
            continue
        margin = lhs - rhs
        relative = margin / scale if scale else margin
        if worst is None or relative < worst[1]:
            worst = (t, relative)
        if not margin > tol * abs(scale):
            failures.append({"t": t, "lhs": lhs, "rhs": rhs})
    evidence: Dict[str, object] = {"points": points, "tol": tol, "note": "sanity scan, not a proof"}
    if worst is not None:
        evidence["worst"] = {"t": worst[0], "relative_margin": worst[1]}
    if failures:
        evidence["failures"] = failures[:10]
    return Certificate(
        name=name,
        kind=CertificateKind.NUMERIC_SCAN,
        verdict=Verdict.FAIL if failures or not points else Verdict.PASS,
        anchor=anchor,
        evidence=evidence,
    )


def inequality_scan(name: str, grid: Optional[Sequence] = None, tol=None) -> Certificate:
    if name not in INEQUALITIES:
        raise DomainError(f"unknown inequality {name}; expected one of {sorted(INEQUALITIES)}")
    make_sampler, (lo, hi) = INEQUALITIES[name]
    grid = log_grid(lo, hi) if grid is None else [mpmath.mpf(t) for t in grid]
    floor = lo if name == "d24ineq3" else 0
    if any(t < floor or t <= 0 for t in grid):
        raise DomainError(f"{name} grid leaves its domain t > {floor}")
    tol = settings.SCAN_TOL if tol is None else tol
    logger.info("scanning %s on %s points", name, len(grid))
    return scan(name, make_sampler(), grid, tol)


def special_values_check(tol=None) -> Certificate:
    """E2(i) = 3/π, E6(i) = 0 and E4(i) = 3Γ(1/4)⁸/(64π⁶)."""
    pi = mpmath.pi
    targets = {
        2: (3 / pi, 1e-10),
        4: (3 * mpmath.gamma(mpmath.mpf(1) / 4) ** 8 / (64 * pi ** 6), 1e-8),
        6: (mpmath.mpf(0), 1e-10),
    }
    parts = []
    for k, (target, default_tol) in targets.items():
        bound = default_tol if tol is None else tol
        value = series_eval(eisenstein_qexp(k, settings.DEFAULT_PREC), 1).value
        distance = abs(value - target)
        parts.append(
            Certificate(
                name=f"E{k}(i)",
                kind=CertificateKind.NUMERIC_SCAN,
                verdict=Verdict.PASS if distance < bound else Verdict.FAIL,
                evidence={"value": value, "target": target, "distance": distance, "tol": bound},
            )
        )
    return Certificate.composite("special-values", CertificateKind.NUMERIC_SCAN, parts, anchor="eisval")

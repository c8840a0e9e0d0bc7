# qmcert/domains/rqm/service.py
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

import mpmath

from qmcert.core.config import settings
from qmcert.core.exceptions import DomainError, InhomogeneousError
from qmcert.domains.qm1.entities import QmPoly1
from qmcert.domains.qm1.service import qm1_to_qexp
from qmcert.domains.qm2.entities import QmPoly2
from qmcert.domains.qm2.service import qm2_to_qexp
from qmcert.domains.qseries.entities import QSeries
from qmcert.domains.qseries.service import series_eval
from qmcert.domains.rqm.entities import BasePoly, RqmElem, level_of
from qmcert.shared.models.polynomial import Monomial
from qmcert.shared.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class RqmValue:
    value: mpmath.mpf
    magnitude: mpmath.mpf  # Σ |group contribution|, the scale for relative margins
    flipped: bool = False


def rqm_from_poly(poly: BasePoly) -> RqmElem:
    return RqmElem.from_poly(poly)


def as_rqm(x) -> RqmElem:
    if isinstance(x, RqmElem):
        return x
    if isinstance(x, (QmPoly1, QmPoly2)):
        return RqmElem.from_poly(x)
    if isinstance(x, (int, Fraction)):
        return RqmElem.constant(x)
    raise DomainError(f"cannot view {type(x).__name__} in the extension ring")


def _slash_images(level: int):
    P, T = RqmElem.P(level), RqmElem.T(1, level)
    e2 = RqmElem.from_poly(QmPoly1.generator("E2") if level == 1 else QmPoly2.generator("E2"))
    e2_slashed = e2 - P * T * 6
    if level == 1:
        return [e2_slashed, RqmElem.from_poly(QmPoly1.generator("E4")), RqmElem.from_poly(QmPoly1.generator("E6"))]
    return [-RqmElem.from_poly(QmPoly2.generator("H4")), -RqmElem.from_poly(QmPoly2.generator("H2")), e2_slashed]


def rqm_slash_S(f: BasePoly) -> RqmElem:
    """f|_k S for homogeneous f, with E2 -> E2 − 6PT, H2 -> −H4, H4 -> −H2."""
    level = level_of(f)
    if f.is_zero():
        return RqmElem({}, level)
    if not f.is_homogeneous():
        raise InhomogeneousError(f"slash by S needs a single weight, got {sorted(f.weights())}")
    return f.substitute(_slash_images(level), RqmElem.one(level))


@lru_cache(maxsize=4096)
def _slash_monomial(level: int, mono: Monomial) -> RqmElem:
    ring = QmPoly1 if level == 1 else QmPoly2
    return rqm_slash_S(ring({mono: Fraction(1)}))


def rqm_derivative(x: RqmElem) -> RqmElem:
    """D on the base ring, D(P) = 0, D(T) = PT²/2."""
    out = RqmElem({}, x.level)
    for (p, u), poly in x.components().items():
        out = out + RqmElem.from_poly(poly.derivative(), p, u)
        if u:
            out = out + RqmElem.from_poly(poly, p + 1, u + 1) * Fraction(u, 2)
    return out


def rqm_serre(x: RqmElem, k) -> RqmElem:
    e2 = RqmElem.from_poly(x.base_ring.generator("E2"))
    return rqm_derivative(x) - e2 * x * Fraction(k) / 12


def rqm_weight(x: RqmElem) -> int:
    return x.weight


def rqm_components(x) -> Dict[Tuple[int, int], BasePoly]:
    """Base-ring polynomials keyed by (P-power, T-power)."""
    return as_rqm(x).components()


@lru_cache(maxsize=256)
def rqm_flip(x: RqmElem) -> RqmElem:
    """y with y(t) = x(1/t) on the imaginary axis."""
    out = RqmElem({}, x.level)
    for (p, u, mono), c in x.items():
        k = x.base_ring.monomial_weight(mono)
        if k % 2:
            raise DomainError(f"odd base weight {k} has no rational flip sign")
        sign = -1 if (k // 2) % 2 else 1
        shift = RqmElem({(p, -u - k, (0, 0, 0)): c * sign}, x.level)
        out = out + shift * _slash_monomial(x.level, mono)
    return out


@lru_cache(maxsize=1024)
def _base_qexp(poly: BasePoly, prec: int) -> QSeries:
    if isinstance(poly, QmPoly1):
        return qm1_to_qexp(poly, prec)
    return qm2_to_qexp(poly, prec)


def rqm_eval(x, t, prec: Optional[int] = None, tol=None) -> RqmValue:
    """Σ π^(−p)·t^(−u)·B(it) over the (p, u) groups of x.

    Each group is expanded exactly before evaluation, so cancellation inside a
    group never reaches floating point.
    """
    x = as_rqm(x)
    prec = settings.DEFAULT_PREC if prec is None else prec
    t = mpmath.mpf(t)
    if t <= 0:
        raise DomainError(f"evaluation point must satisfy t > 0, got {t}")
    value = mpmath.mpf(0)
    magnitude = mpmath.mpf(0)
    for (p, u), poly in x.components().items():
        base = series_eval(_base_qexp(poly, prec), t, tol, strict=True).value
        contribution = base * mpmath.pi ** (-p) * t ** (-u)
        value += contribution
        magnitude += abs(contribution)
    return RqmValue(value=value, magnitude=magnitude)


def axis_eval(x, t, prec: Optional[int] = None, tol=None) -> RqmValue:
    """Evaluate at z = it; points with t < 1 go through the flip to 1/t."""
    x = as_rqm(x)
    t = mpmath.mpf(t)
    if t < 1:
        flipped = rqm_eval(rqm_flip(x), 1 / t, prec, tol)
        return RqmValue(value=flipped.value, magnitude=flipped.magnitude, flipped=True)
    return rqm_eval(x, t, prec, tol)


def _constant_term(poly: BasePoly) -> Fraction:
    # value at the cusp: every level-1 generator is 1; at level 2, H2 -> 0, H4 -> 1, E2 -> 1
    if isinstance(poly, QmPoly1):
        return sum(poly.terms.values(), Fraction(0))
    return sum((c for m, c in poly.items() if m[0] == 0), Fraction(0))


def rqm_leading_term(x: RqmElem) -> Optional[Tuple[int, Dict[int, Fraction]]]:
    """Dominant behaviour as t -> ∞: (u, {p: c}) meaning Σ c·π^(−p)·t^(−u).

    Groups whose base form vanishes at the cusp decay exponentially and never
    dominate a group with a nonzero constant term. Returns None when every
    group vanishes at the cusp.
    """
    by_u: Dict[int, Dict[int, Fraction]] = {}
    for (p, u), poly in as_rqm(x).components().items():
        c = _constant_term(poly)
        if c:
            by_u.setdefault(u, {})[p] = c
    if not by_u:
        return None
    u = min(by_u)
    return u, by_u[u]


def rqm_leading_limit(x, y) -> Tuple[Fraction, int]:
    """Exact lim_{t→∞} x(it)/y(it) as (c, n) meaning c·π^(−n)."""
    lx, ly = rqm_leading_term(as_rqm(x)), rqm_leading_term(as_rqm(y))
    if lx is None or ly is None:
        raise DomainError("limit undetermined: an operand vanishes at the cusp in every group")
    (ux, px), (uy, py) = lx, ly
    if ux != uy or len(px) != 1 or len(py) != 1:
        raise DomainError("limit is 0, infinite, or mixes powers of π")
    (nx, cx), (ny, cy) = next(iter(px.items())), next(iter(py.items()))
    return cx / cy, nx - ny

# qmcert/domains/qseries/service.py
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Dict, List, Union

import mpmath

from qmcert.core.config import settings
from qmcert.core.exceptions import DomainError, PrecisionError
from qmcert.domains.qseries.entities import QSeries, Scalar, SeriesValue, VanishingOrder
from qmcert.shared.utils.arith import r4_divisor_formula, sigma
from qmcert.shared.utils.logger import get_logger

logger = get_logger(__name__)

mpmath.mp.dps = settings.EVAL_DPS

_EISENSTEIN_SCALE = {2: -24, 4: 240, 6: -504}


def r4_count(n: int) -> int:
    """Number of x in Z^4 with |x|^2 = n."""
    if n < 0:
        raise DomainError(f"r4_count expects n >= 0, got {n}")
    return r4_divisor_formula(n)


def r4_enumerate(n: int) -> int:
    """Direct lattice count of r4(n), used to cross-check the divisor formula."""
    if n < 0:
        raise DomainError(f"r4_enumerate expects n >= 0, got {n}")
    r = isqrt(n)
    count = 0
    for a in range(-r, r + 1):
        ra = n - a * a
        for b in range(-r, r + 1):
            rb = ra - b * b
            if rb < 0:
                continue
            for c in range(-r, r + 1):
                rest = rb - c * c
                if rest < 0:
                    continue
                d = isqrt(rest)
                if d * d == rest:
                    count += 1 if d == 0 else 2
    return count


@lru_cache(maxsize=64)
def eisenstein_qexp(k: int, prec: int) -> QSeries:
    if k not in _EISENSTEIN_SCALE:
        raise DomainError(f"Eisenstein series E{k} not available; expected 2, 4 or 6")
    if prec < 0:
        raise DomainError(f"precision must be >= 0, got {prec}")
    scale = _EISENSTEIN_SCALE[k]
    coeffs: Dict[int, Fraction] = {0: Fraction(1)}
    n = 1
    while 2 * n < prec:
        coeffs[2 * n] = Fraction(scale * sigma(k - 1, n))
        n += 1
    return QSeries(coeffs, prec)


@lru_cache(maxsize=64)
def theta4_qexp(j: int, prec: int) -> QSeries:
    """H_j = Θ_j^4 for j in {2, 3, 4}."""
    if j not in (2, 3, 4):
        raise DomainError(f"thetanull H{j} not available; expected 2, 3 or 4")
    if prec < 0:
        raise DomainError(f"precision must be >= 0, got {prec}")
    coeffs: Dict[int, Fraction] = {}
    if j == 2:
        n = 0
        while 2 * n + 1 < prec:
            coeffs[2 * n + 1] = Fraction(2 * r4_count(2 * n + 1))
            n += 1
    else:
        for n in range(prec):
            sign = -1 if (j == 4 and n % 2) else 1
            coeffs[n] = Fraction(sign * r4_count(n))
    return QSeries(coeffs, prec)


@lru_cache(maxsize=16)
def delta_qexp(prec: int) -> QSeries:
    """Δ = q·∏(1 − q^n)^24 from the product formula."""
    if prec < 0:
        raise DomainError(f"precision must be >= 0, got {prec}")
    top = (prec - 1) // 2 - 1  # highest power needed in the product
    if top < 0:
        return QSeries.zero(prec)
    prod: List[int] = [1] + [0] * top
    for n in range(1, top + 1):
        for _ in range(24):
            for i in range(top, n - 1, -1):
                prod[i] -= prod[i - n]
    return QSeries({2 * (i + 1): Fraction(c) for i, c in enumerate(prod)}, prec)


def series_add(a: QSeries, b: Union[QSeries, Scalar]) -> QSeries:
    return a + b


def series_sub(a: QSeries, b: Union[QSeries, Scalar]) -> QSeries:
    return a - b


def series_neg(a: QSeries) -> QSeries:
    return -a


def series_mul(a: QSeries, b: Union[QSeries, Scalar]) -> QSeries:
    return a * b


def series_scale(a: QSeries, factor: Scalar) -> QSeries:
    return a.scale(factor)


def series_pow(a: QSeries, exponent: int) -> QSeries:
    return a ** exponent


def series_inverse(a: QSeries) -> QSeries:
    return a.inverse()


def series_D(a: QSeries) -> QSeries:
    """D = q d/dq; the coefficient at exponent n/2 is multiplied by n/2."""
    return QSeries({n: Fraction(n, 2) * c for n, c in a.items()}, a.prec)


def series_reindex(a: QSeries, factor: int) -> QSeries:
    """Substitute q -> q^factor."""
    if factor < 1:
        raise DomainError(f"reindex factor must be >= 1, got {factor}")
    return QSeries({factor * n: c for n, c in a.items()}, factor * a.prec)


def series_vanishing_order(a: QSeries) -> VanishingOrder:
    for n, c in a.items():
        return VanishingOrder(index=n, leading=c, prec=a.prec)
    return VanishingOrder(index=None, leading=None, prec=a.prec)


def to_mpf(value: Fraction) -> mpmath.mpf:
    return mpmath.mpf(value.numerator) / value.denominator


def series_eval(
    a: QSeries,
    t,
    tol=None,
    *,
    strict: bool = False,
) -> SeriesValue:
    """Evaluate at z = it: Σ c_n·exp(−π·n·t) over the stored terms.

    The tail estimate is the size of the last stored coefficient moved to the
    truncation boundary, |c_last|·exp(−π·(prec − 1)·t). It is a heuristic and
    never a bound.
    """
    t = mpmath.mpf(t)
    if t <= 0:
        raise DomainError(f"evaluation point must satisfy t > 0, got {t}")
    tol = mpmath.mpf(settings.EVAL_TOL if tol is None else tol)
    x = mpmath.exp(-mpmath.pi * t)
    total = mpmath.mpf(0)
    last = Fraction(0)
    for n, c in a.items():
        total += to_mpf(c) * x ** n
        last = c
    boundary = max(a.prec - 1, 0)
    tail = abs(to_mpf(last)) * x ** boundary if a.prec else mpmath.mpf(0)
    flagged = bool(tail > tol)
    if flagged:
        message = f"tail estimate {mpmath.nstr(tail, 5)} exceeds tolerance {mpmath.nstr(tol, 5)} at t={mpmath.nstr(t, 8)}"
        if strict:
            raise PrecisionError(message)
        logger.warning(message)
    return SeriesValue(value=total, tail=tail, flagged=flagged)

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from qmcert.domains.extremal.service import X
from qmcert.domains.qm1 import entities as level1
from qmcert.domains.qm1.entities import QmPoly1
from qmcert.domains.qm2 import entities as theta
from qmcert.domains.qm2.entities import QmPoly2
from qmcert.domains.qm2.service import from_level1
from qmcert.domains.rqm.entities import RqmElem

Poly = Union[QmPoly1, QmPoly2]

# ∂_{2k+2}L = Δ·bracket constants
D8_A = 172800
D8_B = 640
D24_C = 2 ** 11 * 3 ** 7 * 5 ** 2 * 7 ** 2


@dataclass(frozen=True)
class IneqPair:
    """Numerator F and denominator G whose quotient F/G is strictly decreasing in t."""

    name: str
    F: Poly
    G: Poly
    limit_const: Fraction  # lim_{t→0+} F/G = limit_const / π^pi_power
    pi_power: int
    serre_weight: int
    bracket: QmPoly2  # ∂_{2k+2}((∂_kF)G − F(∂_kG)) = Δ·bracket
    F_slash: RqmElem  # expected F|S
    G_slash: RqmElem  # expected G|S
    limit_tol: float


def _P(level: int = 1) -> RqmElem:
    return RqmElem.P(level)


def _T(level: int = 1) -> RqmElem:
    return RqmElem.T(1, level)


def f8() -> QmPoly1:
    return (level1.E2 * level1.E4 - level1.E6) ** 2


def g8() -> QmPoly2:
    h2, h4 = theta.H2, theta.H4
    return h2 ** 3 * (2 * h2 ** 2 + 5 * h2 * h4 + 5 * h4 ** 2)


def f24() -> QmPoly1:
    e2, e4, e6 = level1.E2, level1.E4, level1.E6
    return (
        49 * e2 ** 2 * e4 ** 3
        - 25 * e2 ** 2 * e6 ** 2
        - 48 * e2 * e4 ** 2 * e6
        - 25 * e4 ** 4
        + 49 * e4 * e6 ** 2
    )


def g24() -> QmPoly2:
    h2, h4 = theta.H2, theta.H4
    return h2 ** 5 * (2 * h2 ** 2 + 7 * h2 * h4 + 7 * h4 ** 2)


@lru_cache(maxsize=1)
def d8_pair() -> IneqPair:
    e2, e4, e6 = level1.E2, level1.E4, level1.E6
    F, G = f8(), g8()
    P, T = _P(), _T()
    u = e2 * e4 - e6
    F_slash = F - P * T * (u * e4) * 12 + P ** 2 * T ** 2 * (e4 ** 2) * 36
    h2, h4 = theta.H2, theta.H4
    G_slash = RqmElem.from_poly(-(h4 ** 3) * (2 * h4 ** 2 + 5 * h4 * h2 + 5 * h2 ** 2))
    bracket = from_level1(X(4, 2)) * G * D8_A + theta.H2 * from_level1(F) * D8_B
    return IneqPair(
        name="d8",
        F=F,
        G=G,
        limit_const=Fraction(18),
        pi_power=2,
        serre_weight=10,
        bracket=bracket,
        F_slash=F_slash,
        G_slash=G_slash,
        limit_tol=1e-8,
    )


@lru_cache(maxsize=1)
def d24_pair() -> IneqPair:
    e2, e4, e6 = level1.E2, level1.E4, level1.E6
    F, G = f24(), g24()
    P, T = _P(), _T()
    F_slash = (
        F
        - P * T * (49 * e2 * e4 ** 3 - 25 * e2 * e6 ** 2 - 24 * e4 ** 2 * e6) * 12
        + P ** 2 * T ** 2 * (49 * e4 ** 3 - 25 * e6 ** 2) * 36
    )
    h2, h4 = theta.H2, theta.H4
    G_slash = RqmElem.from_poly(-(h4 ** 5) * (7 * h2 ** 2 + 7 * h2 * h4 + 2 * h4 ** 2))
    bracket = from_level1(X(8, 2)) * G * D24_C
    return IneqPair(
        name="d24",
        F=F,
        G=G,
        limit_const=Fraction(432),
        pi_power=2,
        serre_weight=14,
        bracket=bracket,
        F_slash=F_slash,
        G_slash=G_slash,
        limit_tol=1e-6,
    )


def ineq_pair(name: str) -> IneqPair:
    pairs = {"d8": d8_pair, "d24": d24_pair}
    if name not in pairs:
        raise ValueError(f"Inequality pair {name} not found")
    return pairs[name]()

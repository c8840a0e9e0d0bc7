# qmcert/domains/qm2/service.py
from qmcert.core.exceptions import DepthError, InhomogeneousError
from qmcert.domains.qm1.entities import QmPoly1
from qmcert.domains.qm2 import entities as theta
from qmcert.domains.qm2.entities import QmPoly2
from qmcert.domains.qseries.entities import QSeries, VanishingOrder
from qmcert.domains.qseries.service import eisenstein_qexp, series_vanishing_order, theta4_qexp


def from_level1(p: QmPoly1) -> QmPoly2:
    """Rewrite a level-one form in the thetanull basis (E4, E6 through e4theta, e6theta)."""
    return p.substitute([theta.E2, theta.E4, theta.E6], QmPoly2.one())


def qm2_derivative(p: QmPoly2) -> QmPoly2:
    return p.derivative()


def qm2_serre(p: QmPoly2, k) -> QmPoly2:
    return p.serre(k)


def qm2_serre_iter(p: QmPoly2, k, r: int) -> QmPoly2:
    return p.serre_iter(k, r)


def _require_modular(p: QmPoly2, action: str) -> None:
    if p.is_zero():
        return
    if p.depth() > 0:
        raise DepthError(f"slash by {action} needs depth 0; use rqm_slash_S for elements containing E2")
    if not p.is_homogeneous():
        raise InhomogeneousError(f"slash by {action} needs a single weight, got {sorted(p.weights())}")


def qm2_slash_S(p: QmPoly2) -> QmPoly2:
    """H2 -> -H4, H4 -> -H2."""
    _require_modular(p, "S")
    return p.substitute([-theta.H4, -theta.H2, theta.E2], QmPoly2.one())


def qm2_slash_T(p: QmPoly2) -> QmPoly2:
    """H2 -> -H2, H4 -> H2 + H4."""
    _require_modular(p, "T")
    return p.substitute([-theta.H2, theta.H2 + theta.H4, theta.E2], QmPoly2.one())


def qm2_to_qexp(p: QmPoly2, prec: int) -> QSeries:
    series = [theta4_qexp(2, prec), theta4_qexp(4, prec), eisenstein_qexp(2, prec)]
    return p.to_qexp(series, prec)


def qm2_vanishing_order(p: QmPoly2, prec: int) -> VanishingOrder:
    return series_vanishing_order(qm2_to_qexp(p, prec))

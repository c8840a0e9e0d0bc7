# qmcert/domains/qm1/service.py
from qmcert.domains.qm1.entities import QmPoly1
from qmcert.domains.qseries.entities import QSeries, VanishingOrder
from qmcert.domains.qseries.service import eisenstein_qexp, series_vanishing_order
from qmcert.shared.models.polynomial import WeightDepth


def weight_depth(p: QmPoly1) -> WeightDepth:
    return p.weight_depth()


def qm1_derivative(p: QmPoly1) -> QmPoly1:
    return p.derivative()


def qm1_serre(p: QmPoly1, k) -> QmPoly1:
    return p.serre(k)


def qm1_serre_iter(p: QmPoly1, k, r: int) -> QmPoly1:
    return p.serre_iter(k, r)


def qm1_to_qexp(p: QmPoly1, prec: int) -> QSeries:
    series = [eisenstein_qexp(k, prec) for k in (2, 4, 6)]
    return p.to_qexp(series, prec)


def qm1_vanishing_order(p: QmPoly1, prec: int) -> VanishingOrder:
    return series_vanishing_order(qm1_to_qexp(p, prec))

# qmcert/domains/extremal/service.py
import threading
from fractions import Fraction
from typing import Callable, Dict, Tuple

from qmcert.core.exceptions import DomainError, QmCertError
from qmcert.domains.extremal.entities import ExtremalForm
from qmcert.domains.qm1.entities import E2, E4, E6, QmPoly1
from qmcert.domains.qm1.service import qm1_to_qexp
from qmcert.shared.utils.logger import get_logger

logger = get_logger(__name__)


class ExtremalFormRegistry:
    """Memo table of constructed forms keyed by (weight, depth).

    Lookup-or-build runs under a reentrant lock: building X(w, s) asks the
    registry for lower weights from the same thread.
    """

    def __init__(self):
        self._forms: Dict[Tuple[int, int], ExtremalForm] = {}
        self._lock = threading.RLock()

    def get(self, weight: int, depth: int, build: Callable[[], QmPoly1]) -> ExtremalForm:
        key = (weight, depth)
        with self._lock:
            form = self._forms.get(key)
            if form is None:
                form = _normalise(weight, depth, build())
                self._forms[key] = form
            return form

    def clear(self) -> None:
        with self._lock:
            self._forms.clear()


def _normalise(weight: int, depth: int, raw: QmPoly1) -> ExtremalForm:
    order = weight // 6 if depth == 1 else weight // 4
    series = qm1_to_qexp(raw, 2 * order + 2)
    found = series.order
    if found != 2 * order:
        raise QmCertError(
            f"recurrence for X({weight},{depth}) vanishes to index {found}, expected {2 * order}"
        )
    scale = series.coefficient(found)
    poly = raw / scale
    wd = poly.weight_depth()
    if wd.weight != weight or wd.depth != depth:
        raise QmCertError(f"recurrence for X({weight},{depth}) produced weight/depth {wd}")
    if scale != 1:
        logger.warning("X(%s,%s) recurrence constant off by factor %s", weight, depth, scale)
    logger.debug("built X(%s,%s) with %s monomials", weight, depth, len(poly.terms))
    return ExtremalForm(weight=weight, depth=depth, poly=poly, recurrence_scale=scale)


registry = ExtremalFormRegistry()


def _build_depth1(w: int) -> QmPoly1:
    if w == 6:
        return (E2 * E4 - E6) / 720
    base = w - w % 6
    if w % 6 == 2:
        return extremal_depth1(base).poly.serre(base - 1) * Fraction(12, base + 1)
    if w % 6 == 4:
        return E4 * extremal_depth1(base).poly
    w0 = w - 6
    x0 = extremal_depth1(w0).poly
    x2 = extremal_depth1(w0 + 2).poly
    return (E4 * x2 - E6 * x0) * Fraction(w0 + 6, 864 * (w0 + 5))


def _build_depth2(w: int) -> QmPoly1:
    if w == 4:
        return (E4 - E2 * E2) / 288
    if w % 4 == 0:
        w0 = w - 4
        x = extremal_depth2(w0).poly
        const = Fraction(3 * (w0 + 4) ** 2, 16 * (w0 + 1) * (w0 + 2) ** 2 * (w0 + 3))
        return (E4 * x * Fraction(w0 * (w0 + 1), 36) - x.serre_iter(w0 - 2, 2)) * const
    w0 = w - 2
    return extremal_depth2(w0).poly.serre(w0 - 2) * Fraction(6, w0 + 1)


def extremal_depth1(w: int) -> ExtremalForm:
    if not isinstance(w, int) or w % 2 or w < 6:
        raise DomainError(f"depth-1 extremal forms need even weight >= 6, got {w}")
    return registry.get(w, 1, lambda: _build_depth1(w))


def extremal_depth2(w: int) -> ExtremalForm:
    if not isinstance(w, int) or w % 2 or w < 4 or w == 6:
        raise DomainError(f"depth-2 extremal forms need even weight >= 4 other than 6, got {w}")
    return registry.get(w, 2, lambda: _build_depth2(w))


def extremal(w: int, s: int) -> ExtremalForm:
    if s == 1:
        return extremal_depth1(w)
    if s == 2:
        return extremal_depth2(w)
    raise DomainError(f"extremal forms are available for depth 1 and 2, got {s}")


def X(w: int, s: int) -> QmPoly1:
    return extremal(w, s).poly

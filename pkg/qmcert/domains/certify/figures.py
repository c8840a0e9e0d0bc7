# qmcert/domains/certify/figures.py
import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, TextIO

import mpmath

from qmcert.core.config import settings
from qmcert.core.exceptions import DomainError, QmCertError
from qmcert.domains.certify.entities import f24, g24, ineq_pair
from qmcert.domains.certify.harder import BOUNDARY_T, HARDER_CONST, bracket_a, harder_numerator
from qmcert.domains.qm2 import entities as theta
from qmcert.domains.rqm.entities import RqmElem
from qmcert.domains.rqm.service import as_rqm, axis_eval
from qmcert.shared.utils.logger import get_logger

logger = get_logger(__name__)

DIGITS = 15


@dataclass(frozen=True)
class FigureLayout:
    name: str
    columns: Sequence[str]
    grid: Callable[[int], List[mpmath.mpf]]
    row: Callable[[mpmath.mpf], List[mpmath.mpf]]


def linear_grid(lo, hi, points: int, open_ends: bool = False) -> List[mpmath.mpf]:
    lo, hi = mpmath.mpf(lo), mpmath.mpf(hi)
    if open_ends:
        return [lo + (hi - lo) * (i + 1) / (points + 1) for i in range(points)]
    return [lo + (hi - lo) * i / (points - 1) for i in range(points)]


def _ratio_row(name: str) -> Callable[[mpmath.mpf], List[mpmath.mpf]]:
    pair = ineq_pair(name)
    F, G = as_rqm(pair.F), as_rqm(pair.G)

    def row(t):
        return [axis_eval(F, t).value / axis_eval(G, t).value]

    return row


def _harder_row() -> Callable[[mpmath.mpf], List[mpmath.mpf]]:
    P = RqmElem.P(2)
    lhs_num = P ** 2 * as_rqm(g24()) * 432 - as_rqm(f24())
    rhs_num = RqmElem.from_poly(theta.DELTA) * bracket_a() * HARDER_CONST
    numerator = harder_numerator()
    G = as_rqm(g24())

    def row(t):
        g = axis_eval(G, t).value
        return [
            axis_eval(lhs_num, t).value / g,
            axis_eval(rhs_num, t).value / g,
            axis_eval(numerator, t).value / g,
        ]

    return row


FIGURES: Dict[str, Callable[[], FigureLayout]] = {
    "d8": lambda: FigureLayout("d8", ("t", "F/G"), lambda n: linear_grid("0.05", 5, n), _ratio_row("d8")),
    "d24": lambda: FigureLayout("d24", ("t", "F/G"), lambda n: linear_grid("0.05", 5, n), _ratio_row("d24")),
    "d24harder": lambda: FigureLayout(
        "d24harder",
        ("t", "LHS", "RHS", "g"),
        lambda n: linear_grid(0, BOUNDARY_T, n, open_ends=True),
        _harder_row(),
    ),
}


def figure_layout(name: str) -> FigureLayout:
    if name not in FIGURES:
        raise DomainError(f"unknown figure {name}; expected one of {sorted(FIGURES)}")
    return FIGURES[name]()


def figure_rows(layout: FigureLayout, points: Optional[int] = None):
    """Yield (values, note) per grid point; a failed evaluation yields its error as the note."""
    name = layout.name
    points = settings.GRID_POINTS if points is None else points
    for t in layout.grid(points):
        try:
            yield [t] + layout.row(t), ""
        except QmCertError as exc:
            logger.warning("figure %s: evaluation failed at t=%s: %s", name, mpmath.nstr(t, 8), exc)
            yield [t] + [None] * (len(layout.columns) - 1), f"error: {exc}"


def write_figure(name: str, out: TextIO, points: Optional[int] = None) -> int:
    layout = figure_layout(name)
    writer = csv.writer(out)
    writer.writerow(list(layout.columns) + ["note"])
    count = 0
    for values, note in figure_rows(layout, points):
        writer.writerow(["" if v is None else mpmath.nstr(v, DIGITS) for v in values] + [note])
        count += 1
    return count


def write_figure_file(name: str, path: Path, points: Optional[int] = None) -> int:
    with open(path, "w", newline="") as fh:
        count = write_figure(name, fh, points)
    logger.info("wrote %s rows of figure %s to %s", count, name, path)
    return count

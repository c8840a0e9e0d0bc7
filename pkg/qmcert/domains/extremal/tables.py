"""Tabulated extremal forms of depth <= 2 and weight <= 14."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from qmcert.domains.qm1.entities import E2, E4, E6, QmPoly1


@dataclass(frozen=True)
class TableRow:
    weight: int
    depth: int
    closed_form: QmPoly1
    coefficients: Tuple[Fraction, ...]  # starting at the vanishing order


def _row(weight: int, depth: int, closed_form: QmPoly1, *coefficients) -> TableRow:
    return TableRow(weight, depth, closed_form, tuple(Fraction(c) for c in coefficients))


EXTREMAL_TABLE: Tuple[TableRow, ...] = (
    _row(6, 1, (E2 * E4 - E6) / 720, 1, 18, 84, 292, 630),
    _row(8, 1, (E4 ** 2 - E2 * E6) / 1008, 1, 66, 732, 4228, 15630),
    _row(10, 1, (E2 * E4 ** 2 - E4 * E6) / 720, 1, 258, 6564, 66052, 390630),
    _row(
        12, 1,
        (-12 * E2 * E4 * E6 + 5 * E4 ** 3 + 7 * E6 ** 2) / 3991680,
        1, 56, 1002, 9296, 57708,
    ),
    _row(
        14, 1,
        (7 * E2 * E4 ** 3 + 5 * E2 * E6 ** 2 - 12 * E4 ** 2 * E6) / 4717440,
        1, 128, 4050, 58880, 525300,
    ),
    _row(4, 2, (E4 - E2 ** 2) / 288, 1, 6, 12, 28, 30),
    _row(
        8, 2,
        (-7 * E2 ** 2 * E4 + 2 * E2 * E6 + 5 * E4 ** 2) / 362880,
        1, 16, 102, 416, 1308,
    ),
    _row(
        10, 2,
        (5 * E2 ** 2 * E6 + 2 * E2 * E4 ** 2 - 7 * E4 * E6) / 1088640,
        1, Fraction(104, 3), 390, 2480, 11140,
    ),
    _row(
        12, 2,
        (-77 * E2 ** 2 * E4 ** 2 + 34 * E2 * E4 * E6 + 50 * E4 ** 3 - 7 * E6 ** 2) / 798336000,
        1, Fraction(51, 2), Fraction(1422, 5), 1944, 9714,
    ),
    _row(
        14, 2,
        (13 * E2 ** 2 * E4 * E6 + E2 * E4 ** 3 - 3 * E2 * E6 ** 2 - 11 * E4 ** 2 * E6) / 415134720,
        1, Fraction(93, 2), 810, 8004, 54474,
    ),
)

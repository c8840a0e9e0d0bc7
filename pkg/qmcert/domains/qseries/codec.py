"""Text form of truncated series: ``c0*q^(e0) + c1*q^(e1) + ... + O(q^(p))``."""

import re
from fractions import Fraction
from typing import Dict, Optional

from qmcert.core.exceptions import ExpressionSyntaxError
from qmcert.domains.qseries.entities import QSeries
from qmcert.shared.utils.arith import format_fraction


def _format_exponent(index: int) -> str:
    if index % 2 == 0:
        return str(index // 2)
    return f"{index}/2"


def format_qseries(a: QSeries) -> str:
    parts = [f"{format_fraction(c)}*q^({_format_exponent(n)})" for n, c in a.items()]
    parts.append(f"O(q^({_format_exponent(a.prec)}))")
    return " + ".join(parts)


def format_qseries_human(a: QSeries, terms: Optional[int] = None) -> str:
    """Compact display such as ``q^2 + 56q^3 - 24q^(3/2)``; the O-term is omitted."""
    chunks = []
    for i, (n, c) in enumerate(a.items()):
        if terms is not None and i >= terms:
            break
        exp = _format_exponent(n)
        mag = abs(c)
        if n == 0:
            body = format_fraction(mag)
        else:
            power = "q" if exp == "1" else (f"q^{exp}" if "/" not in exp else f"q^({exp})")
            coef = "" if mag == 1 else format_fraction(mag)
            body = f"{coef}{power}"
        sign = "-" if c < 0 else "+"
        chunks.append((sign, body))
    if not chunks:
        return "0"
    first_sign, first_body = chunks[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in chunks[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:"
    r"O\(q\^\((?P<big>-?\d+(?:/2)?)\)\)"
    r"|(?P<coef>-?\d+(?:/\d+)?)\*q\^\((?P<exp>\d+(?:/2)?)\)"
    r")\s*"
)


def _parse_exponent(text: str, offset: int) -> int:
    value = Fraction(text) * 2
    if value.denominator != 1:
        raise ExpressionSyntaxError(f"exponent {text} is not a multiple of 1/2", offset)
    return int(value)


def parse_qseries(text: str) -> QSeries:
    pos = 0
    coeffs: Dict[int, Fraction] = {}
    prec: Optional[int] = None
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ExpressionSyntaxError("malformed series term", pos)
        if not first and m.group("sign") is None:
            raise ExpressionSyntaxError("expected '+' or '-' between terms", pos)
        if prec is not None:
            raise ExpressionSyntaxError("terms after the O-term", pos)
        negate = m.group("sign") == "-"
        if m.group("big") is not None:
            prec = _parse_exponent(m.group("big"), m.start("big"))
        else:
            coef = Fraction(m.group("coef"))
            index = _parse_exponent(m.group("exp"), m.start("exp"))
            coeffs[index] = coeffs.get(index, 0) + (-coef if negate else coef)
        first = False
        pos = m.end()
    if prec is None:
        raise ExpressionSyntaxError("missing O(q^(p)) term", len(text))
    return QSeries(coeffs, prec)

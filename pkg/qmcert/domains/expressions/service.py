# qmcert/domains/expressions/service.py
from fractions import Fraction
from typing import Optional, Union

import mpmath

from qmcert.core.config import settings
from qmcert.core.exceptions import DomainError
from qmcert.domains.certify.service import common_ring
from qmcert.domains.expressions.entities import Binary, Call, Expr, Gen, Neg, Num, Pow, XRef
from qmcert.domains.expressions.parser import parse_expr
from qmcert.domains.extremal.service import X
from qmcert.domains.qm1 import entities as level1
from qmcert.domains.qm1.entities import QmPoly1
from qmcert.domains.qm1.service import qm1_to_qexp
from qmcert.domains.qm2 import entities as theta
from qmcert.domains.qm2.entities import QmPoly2
from qmcert.domains.qm2.service import qm2_to_qexp
from qmcert.domains.qseries.entities import QSeries, SeriesValue
from qmcert.domains.qseries.service import series_eval
from qmcert.domains.rqm.entities import RqmElem
from qmcert.domains.rqm.service import (
    RqmValue,
    as_rqm,
    axis_eval,
    rqm_derivative,
    rqm_flip,
    rqm_serre,
    rqm_slash_S,
)

Value = Union[Fraction, QmPoly1, QmPoly2, RqmElem]


# --- printing ---


def print_expr(node: Expr) -> str:
    """Source text that parses back to the same tree."""
    if isinstance(node, Gen):
        return node.name
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, XRef):
        return f"X({node.weight},{node.depth})"
    if isinstance(node, Neg):
        return f"(-{print_expr(node.operand)})"
    if isinstance(node, Pow):
        return f"{print_expr(node.base)}^{node.exponent}"
    if isinstance(node, Call):
        head = f"S[{node.weight}]" if node.func == "S" else node.func
        return f"{head}({print_expr(node.arg)})"
    if isinstance(node, Binary):
        return f"({print_expr(node.left)} {node.op} {print_expr(node.right)})"
    raise DomainError(f"not an expression node: {node!r}")


# --- elaboration ---


def _generator(name: str) -> Value:
    table = {
        "E2": level1.E2,
        "E4": level1.E4,
        "E6": level1.E6,
        "H2": theta.H2,
        "H3": theta.H3,
        "H4": theta.H4,
        "Delta": level1.DELTA,
    }
    if name in table:
        return table[name]
    if name == "P":
        return RqmElem.P()
    return RqmElem.T()


def _rational(value: Value) -> Optional[Fraction]:
    """The value as a rational number, if it is one."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (QmPoly1, QmPoly2)):
        if value.is_zero():
            return Fraction(0)
        return value.constant_term() if value.weights() == {0} else None
    if isinstance(value, RqmElem):
        if value.is_zero():
            return Fraction(0)
        groups = value.components()
        if set(groups) == {(0, 0)}:
            return _rational(groups[(0, 0)])
    return None


def simplify(value: Value) -> Value:
    """Drop to the smallest ring: extension elements free of P and T become polynomials."""
    if isinstance(value, RqmElem):
        groups = value.components()
        if not groups:
            return Fraction(0)
        if set(groups) == {(0, 0)}:
            return groups[(0, 0)]
    return value


def _binary(op: str, a: Value, b: Value) -> Value:
    if op == "/":
        divisor = _rational(b)
        if divisor is None:
            raise DomainError("division is only by rational constants")
        if divisor == 0:
            raise DomainError("division by zero")
        return a / divisor
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return {"+": a + b, "-": a - b, "*": a * b}[op]
    if isinstance(a, Fraction) and op == "*":
        return b * a
    if isinstance(b, Fraction) and op == "*":
        return a * b
    a, b = common_ring(a, b)
    return {"+": a + b, "-": a - b, "*": a * b}[op]


def _call(func: str, value: Value, weight: Optional[int]) -> Value:
    if func == "flip":
        return simplify(rqm_flip(as_rqm(value)))
    if func == "slashS":
        if isinstance(value, Fraction):
            raise DomainError("slashS needs a weighted element, got a constant")
        return simplify(rqm_slash_S(value) if not isinstance(value, RqmElem) else _slash_rqm(value))
    if isinstance(value, Fraction):
        value = QmPoly1.constant(value)
    if isinstance(value, RqmElem):
        out = rqm_derivative(value) if func == "D" else rqm_serre(value, weight)
        return simplify(out)
    return value.derivative() if func == "D" else value.serre(weight)


def _slash_rqm(value: RqmElem) -> RqmElem:
    # slash by S is defined here on base-ring elements only
    base = simplify(value)
    if isinstance(base, RqmElem):
        raise DomainError("slashS applies to quasimodular polynomials, not to P/T expressions")
    return rqm_slash_S(base)


def elaborate(node: Union[Expr, str]) -> Value:
    """Evaluate the tree into the smallest ring holding it (H3 -> H2 + H4, Delta -> (E4³ − E6²)/1728)."""
    if isinstance(node, str):
        node = parse_expr(node)
    if isinstance(node, Num):
        return Fraction(node.value)
    if isinstance(node, Gen):
        return _generator(node.name)
    if isinstance(node, XRef):
        return X(node.weight, node.depth)
    if isinstance(node, Neg):
        return -elaborate(node.operand)
    if isinstance(node, Pow):
        base = elaborate(node.base)
        if node.exponent < 0 and isinstance(base, (QmPoly1, QmPoly2)):
            r = _rational(base)
            if r is None:
                raise DomainError("negative powers need a rational or c·T^u base")
            base = r
        if node.exponent < 0 and _rational(base) == 0:
            raise DomainError(f"zero raised to the negative power {node.exponent}")
        return base ** node.exponent
    if isinstance(node, Binary):
        return _binary(node.op, elaborate(node.left), elaborate(node.right))
    if isinstance(node, Call):
        return _call(node.func, elaborate(node.arg), node.weight)
    raise DomainError(f"not an expression node: {node!r}")


# --- expansion and evaluation ---


def expand_qexp(value: Value, prec: Optional[int] = None) -> QSeries:
    prec = settings.DEFAULT_PREC if prec is None else prec
    value = simplify(value)
    if isinstance(value, Fraction):
        return QSeries.constant(value, prec)
    if isinstance(value, QmPoly1):
        return qm1_to_qexp(value, prec)
    if isinstance(value, QmPoly2):
        return qm2_to_qexp(value, prec)
    raise DomainError("expressions with P or T have no q-expansion")


def evaluate(value: Value, t, prec: Optional[int] = None, tol=None) -> Union[SeriesValue, RqmValue]:
    """Value at z = it. Base-ring elements at t >= 1 report the tail estimate too."""
    t = mpmath.mpf(t)
    if t <= 0:
        raise DomainError(f"evaluation point must satisfy t > 0, got {t}")
    value = simplify(value)
    if not isinstance(value, RqmElem) and t >= 1:
        return series_eval(expand_qexp(value, prec), t, tol)
    return axis_eval(as_rqm(value), t, prec, tol)

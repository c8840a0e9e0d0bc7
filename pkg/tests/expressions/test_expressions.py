# tests/expressions/test_expressions.py
import mpmath
import pytest

from qmcert.core.exceptions import DomainError, ExpressionSyntaxError, UnknownIdentifierError
from qmcert.domains.expressions import elaborate, evaluate, expand_qexp, parse_expr, print_expr
from qmcert.domains.expressions.entities import Binary, Gen, Neg, Num, Pow
from qmcert.domains.qm1 import entities as level1


def test_precedence():
    assert parse_expr("E2 + E4 * E6") == Binary("+", Gen("E2"), Binary("*", Gen("E4"), Gen("E6")))
    assert parse_expr("-E2^2") == Neg(Pow(Gen("E2"), 2))
    assert parse_expr("2 - 3 - 4") == Binary("-", Binary("-", Num(2), Num(3)), Num(4))


def test_printed_form_parses_back():
    for src in ("-E2^2 + 3*X(6,1)", "S[10](E4*E6) - D(H2)^3", "flip(T^-2 * P) / 7"):
        tree = parse_expr(src)
        assert parse_expr(print_expr(tree)) == tree
    assert print_expr(parse_expr("-E2^2 + 3*X(6,1)")) == "((-E2^2) + (3 * X(6,1)))"


def test_syntax_errors_carry_offsets():
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_expr("E4 + ")
    assert err.value.offset == 5
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_expr("E4 $ E6")
    assert err.value.offset == 3
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_expr("X(6,1")
    assert err.value.offset == 5


def test_unknown_identifier():
    with pytest.raises(UnknownIdentifierError) as err:
        parse_expr("E4 + Foo")
    assert err.value.offset == 5


def test_elaborate_level1():
    e2, e4 = level1.E2, level1.E4
    assert elaborate("D(E2)") == (e2 * e2 - e4) / 12
    assert elaborate("S[4](E4)") == -level1.E6 / 3
    assert elaborate("Delta - (E4^3 - E6^2)/1728").is_zero()
    assert elaborate("2 - 3 - 4") == -5


def test_elaborate_mixes_levels():
    assert elaborate("H3 - H2 - H4").is_zero()
    assert elaborate("E4 - H2^2 - H2*H4 - H4^2").is_zero()


def test_elaborate_extension_ring():
    assert elaborate("slashS(E2)") == elaborate("E2 - 6*P*T")
    assert elaborate("flip(flip(E4))") == level1.E4
    assert elaborate("T^-2 * T^2") == 1


def test_elaborate_rejects():
    with pytest.raises(DomainError):
        elaborate("E2 / E4")
    with pytest.raises(DomainError):
        elaborate("E4^-1")
    with pytest.raises(DomainError):
        elaborate("E4 / 0")
    with pytest.raises(DomainError):
        elaborate("0^-1")
    with pytest.raises(DomainError):
        elaborate("(E4 - E4)^-2")


def test_expand_qexp():
    series = expand_qexp(elaborate("X(12,1)"), 8)
    assert [series.coefficient(n) for n in (0, 2, 4, 6)] == [0, 0, 1, 56]
    h2 = expand_qexp(elaborate("H2"), 6)
    assert h2.coefficient(1) == 16
    with pytest.raises(DomainError):
        expand_qexp(elaborate("P*T"))


def test_evaluate():
    assert abs(evaluate(elaborate("E6"), 1).value) < mpmath.mpf(10) ** -25
    flipped = evaluate(elaborate("E2 - 3*P"), "0.5")
    assert flipped.flipped
    assert abs(evaluate(elaborate("E2 - 3*P"), 1).value) < mpmath.mpf(10) ** -25
    with pytest.raises(DomainError):
        evaluate(elaborate("E4"), 0)

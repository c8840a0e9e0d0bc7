from fractions import Fraction

import pytest

from qmcert.core.exceptions import ExpressionSyntaxError
from qmcert.domains.qseries import QSeries, format_qseries, format_qseries_human, parse_qseries


def test_format_with_half_exponents():
    a = QSeries({0: 1, 3: Fraction(-1, 2)}, 5)
    assert format_qseries(a) == "1*q^(0) + -1/2*q^(3/2) + O(q^(5/2))"


def test_parse_reads_formatted_text():
    a = QSeries({0: 1, 3: Fraction(-1, 2)}, 5)
    assert parse_qseries(format_qseries(a)) == a


def test_parse_error_offset():
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_qseries("1*q^(0) + x")
    assert err.value.offset == 8


def test_parse_requires_big_o():
    with pytest.raises(ExpressionSyntaxError):
        parse_qseries("1*q^(0)")


def test_human_form():
    a = QSeries({4: 1, 6: 56, 3: -24}, 10)
    assert format_qseries_human(a) == "-24q^(3/2) + q^2 + 56q^3"
    assert format_qseries_human(a, 1) == "-24q^(3/2)"
    assert format_qseries_human(QSeries.zero(4)) == "0"

# tests/cli/test_main.py
import pytest

from qmcert.core.exception_handlers import EXIT_OK, EXIT_USAGE
from qmcert.main import main


def test_no_command_prints_help(capsys):
    assert main([]) == EXIT_USAGE
    assert "usage" in capsys.readouterr().out


def test_qexp(capsys):
    assert main(["qexp", "X(12,1)", "--prec", "8", "--terms", "2"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "q^2 + 56q^3"


def test_qexp_full_form(capsys):
    assert main(["qexp", "H2", "--prec", "4"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "16*q^(1/2) + 64*q^(3/2) + O(q^(2))"


def test_unknown_identifier_exits_with_usage(capsys):
    assert main(["qexp", "E4 + Foo"]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "unknown identifier" in err
    assert "offset 5" in err


def test_extremal(capsys):
    assert main(["extremal", "--weight", "6", "--depth", "1", "--qexp", "3"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "X(6,1) = -1/720*E6 + 1/720*E2*E4"
    assert lines[1] == "q + 18q^2 + 84q^3"


def test_extremal_domain_error(capsys):
    assert main(["extremal", "--weight", "6", "--depth", "2"]) == EXIT_USAGE
    assert "depth-2" in capsys.readouterr().err


def test_eval(capsys):
    assert main(["eval", "E2", "--t", "1", "--digits", "10"]) == EXIT_OK
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "0.9549296586"
    assert out[1].startswith("tail")


def test_figure_to_file(tmp_path):
    out = tmp_path / "d8.csv"
    assert main(["figure", "--name", "d8", "--points", "3", "--out", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0] == "t,F/G,note"
    assert len(lines) == 4


def test_bad_suite_is_rejected_by_argparse():
    with pytest.raises(SystemExit) as err:
        main(["verify", "--suite", "d16"])
    assert err.value.code == 2


def test_zero_to_negative_power_is_a_usage_error(capsys):
    assert main(["qexp", "0^-1"]) == EXIT_USAGE
    assert "negative power" in capsys.readouterr().err

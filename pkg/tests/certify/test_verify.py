# tests/certify/test_verify.py
import orjson
import pytest

from qmcert.core.exception_handlers import EXIT_FAILED, EXIT_OK
from qmcert.domains.certify import entities, suites
from qmcert.domains.certify.service import inequality_scan
from qmcert.main import main


def failing(report_path):
    payload = orjson.loads(report_path.read_bytes())
    return payload, [c["name"] for c in payload["certificates"] if c["verdict"] != "pass"]


@pytest.fixture
def fresh_d8_pair():
    entities.d8_pair.cache_clear()
    yield
    entities.d8_pair.cache_clear()


def test_verify_d8_exits_ok_and_writes_report(tmp_path, capsys):
    report = tmp_path / "d8.json"
    assert main(["verify", "--suite", "d8", "--report", str(report)]) == EXIT_OK
    payload, bad = failing(report)
    assert bad == []
    assert payload["suite"] == "d8"
    assert payload["summary"]["passed"] == payload["summary"]["total"]
    assert "0 failed" in capsys.readouterr().out


def test_corrupted_constant_fails_the_run(monkeypatch, fresh_d8_pair, tmp_path):
    monkeypatch.setattr(entities, "D8_A", entities.D8_A + 1)
    report = tmp_path / "d8.json"
    assert main(["verify", "--suite", "d8", "--report", str(report)]) == EXIT_FAILED
    payload, bad = failing(report)
    assert "d8-decreasing" in bad
    assert payload["summary"]["exact_failed"] >= 1


def test_crashing_check_still_writes_the_report(monkeypatch, tmp_path):
    def _crash():
        return 1 / 0

    monkeypatch.setitem(suites.SUITES, "d8", (_crash,))
    report = tmp_path / "d8.json"
    assert main(["verify", "--suite", "d8", "--report", str(report)]) == EXIT_FAILED
    payload, bad = failing(report)
    assert bad == ["crash"]
    assert payload["certificates"][0]["evidence"]["type"] == "ZeroDivisionError"


def test_d24ineq3_holds_on_the_default_grid():
    cert = inequality_scan("d24ineq3")
    assert cert.passed
    assert cert.evidence["points"] == 128


def test_verify_d24_exits_ok(tmp_path):
    report = tmp_path / "d24.json"
    assert main(["verify", "--suite", "d24", "--report", str(report)]) == EXIT_OK
    assert failing(report)[1] == []


@pytest.mark.parametrize("suite", ["extremal", "appendix"])
def test_remaining_suites_pass(suite):
    certs = suites.run_suite(suite)
    assert certs
    assert [c.name for c in certs if not c.passed] == []

# tests/certify/test_report.py
import io

import orjson
import pytest

from qmcert.core.exceptions import DomainError, QmCertError
from qmcert.domains.certify import suites
from qmcert.domains.certify.figures import figure_layout, linear_grid, write_figure
from qmcert.domains.certify.schemas import REPORT_SCHEMA, ReportSummary, VerificationReport
from qmcert.shared.schemas.certificate import Certificate, CertificateKind, Verdict


def cert(name, verdict, kind=CertificateKind.EXACT_IDENTITY):
    return Certificate(name=name, kind=kind, verdict=verdict)


def test_summary_counts():
    certs = [
        cert("a", Verdict.PASS),
        cert("b", Verdict.FAIL),
        cert("c", Verdict.FAIL, CertificateKind.NUMERIC_SCAN),
        cert("d", Verdict.INCONCLUSIVE),
    ]
    summary = ReportSummary.of(certs)
    assert (summary.total, summary.passed, summary.failed, summary.inconclusive) == (4, 1, 2, 1)
    assert (summary.exact_failed, summary.numeric_failed) == (1, 1)


def test_report_json_shape():
    report = VerificationReport.build("unit", [cert("kkd1eq1[w=12]", Verdict.PASS)], {"SCAN_ORDER": 200})
    payload = orjson.loads(report.to_json())
    assert payload["schema"] == REPORT_SCHEMA
    assert payload["suite"] == "unit"
    assert payload["summary"]["passed"] == 1
    first = payload["certificates"][0]
    assert first["verdict"] == "pass"
    assert first["kind"] == "exact-identity"
    assert first["anchor"] == "kkd1eq1"
    assert first["evidence_class"] == "exact"
    assert report.ok


def test_report_not_ok_when_inconclusive():
    report = VerificationReport.build("unit", [cert("x", Verdict.INCONCLUSIVE)], {})
    assert not report.ok
    assert "0/1 passed" in report.summary_table()


def test_composite_verdicts():
    ok, bad, unsure = cert("p", Verdict.PASS), cert("f", Verdict.FAIL), cert("i", Verdict.INCONCLUSIVE)
    kind = CertificateKind.MONOTONICITY
    assert Certificate.composite("all", kind, [ok, ok]).verdict == Verdict.PASS
    assert Certificate.composite("mixed", kind, [ok, unsure, bad]).verdict == Verdict.FAIL
    assert Certificate.composite("open", kind, [ok, unsure]).verdict == Verdict.INCONCLUSIVE
    assert Certificate.composite("empty", kind, []).verdict == Verdict.INCONCLUSIVE


def test_unknown_suite():
    with pytest.raises(QmCertError):
        suites.run_suite("d16")


def test_raising_check_becomes_failure(monkeypatch):
    def _broken():
        raise DomainError("weight out of range")

    monkeypatch.setitem(suites.SUITES, "broken", (_broken,))
    certs = suites.run_suite("broken")
    assert len(certs) == 1
    assert certs[0].name == "broken"
    assert certs[0].verdict == Verdict.FAIL
    assert "weight out of range" in certs[0].evidence["error"]


def test_d8_suite_passes():
    certs = suites.run_suite("d8")
    assert [c.name for c in certs if not c.passed] == []


def test_linear_grid():
    assert linear_grid(0, 1, 3) == [0, 0.5, 1]
    inner = linear_grid(0, 1, 3, open_ends=True)
    assert inner[0] > 0 and inner[-1] < 1


def test_figure_csv():
    out = io.StringIO()
    rows = write_figure("d8", out, points=3)
    lines = out.getvalue().splitlines()
    assert rows == 3
    assert lines[0] == "t,F/G,note"
    assert lines[1].startswith("0.05,")
    assert len(lines) == 4


def test_unknown_figure():
    with pytest.raises(DomainError):
        figure_layout("d16")

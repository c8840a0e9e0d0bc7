from collections import Counter
from typing import Any, Dict, List

import orjson
from pydantic import Field

from qmcert.shared.schemas.certificate import Certificate, CertificateKind, Verdict
from qmcert.shared.schemas.common import ReportModel

REPORT_SCHEMA = 1


class ReportSummary(ReportModel):
    total: int
    passed: int
    failed: int
    inconclusive: int
    exact_failed: int
    numeric_failed: int

    @classmethod
    def of(cls, certificates: List[Certificate]) -> "ReportSummary":
        counts = Counter(c.verdict for c in certificates)
        failed = [c for c in certificates if c.verdict == Verdict.FAIL]
        numeric = sum(1 for c in failed if c.kind == CertificateKind.NUMERIC_SCAN)
        return cls(
            total=len(certificates),
            passed=counts[Verdict.PASS],
            failed=counts[Verdict.FAIL],
            inconclusive=counts[Verdict.INCONCLUSIVE],
            exact_failed=len(failed) - numeric,
            numeric_failed=numeric,
        )


class VerificationReport(ReportModel):
    schema_version: int = Field(REPORT_SCHEMA, alias="schema")
    suite: str
    settings: Dict[str, Any] = Field(default_factory=dict)
    summary: ReportSummary
    certificates: List[Certificate]

    @classmethod
    def build(cls, suite: str, certificates: List[Certificate], settings: Dict[str, Any]) -> "VerificationReport":
        return cls(
            suite=suite,
            settings=settings,
            summary=ReportSummary.of(certificates),
            certificates=certificates,
        )

    @property
    def ok(self) -> bool:
        return self.summary.failed == 0 and self.summary.inconclusive == 0

    def to_json(self) -> bytes:
        return orjson.dumps(self.model_dump(mode="json", by_alias=True), option=orjson.OPT_INDENT_2)

    def summary_table(self) -> str:
        width = max([len(c.name) for c in self.certificates] + [4])
        lines = [f"{'name'.ljust(width)}  {'kind'.ljust(22)}  verdict"]
        for c in self.certificates:
            lines.append(f"{c.name.ljust(width)}  {c.kind.value.ljust(22)}  {c.verdict.value}")
        s = self.summary
        lines.append(f"{s.passed}/{s.total} passed, {s.failed} failed, {s.inconclusive} inconclusive")
        return "\n".join(lines)

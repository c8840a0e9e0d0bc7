from enum import Enum
from typing import Any, Dict, List

from pydantic import Field, computed_field, field_validator, model_validator

from qmcert.shared.schemas.common import ReportModel, jsonable


class CertificateKind(str, Enum):
    EXACT_IDENTITY = "exact-identity"
    COEFFICIENT_POSITIVITY = "coefficient-positivity"
    VANISHING_ORDER = "vanishing-order"
    MONOTONICITY = "monotonicity"
    NUMERIC_SCAN = "numeric-scan"
    CLOSED_FORM_BOUND = "closed-form-bound"


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


class Certificate(ReportModel):
    name: str
    kind: CertificateKind
    verdict: Verdict
    anchor: str = ""
    evidence: Dict[str, Any] = Field(default_factory=dict)
    parts: List["Certificate"] = Field(default_factory=list)

    @field_validator("evidence", mode="before")
    @classmethod
    def _json_safe(cls, v):
        return jsonable(v or {})

    @computed_field  # type: ignore[misc]
    @property
    def evidence_class(self) -> str:
        return "numeric" if self.kind == CertificateKind.NUMERIC_SCAN else "exact"

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS

    @model_validator(mode="after")
    def _default_anchor(self) -> "Certificate":
        if not self.anchor:
            self.anchor = self.name.split("[", 1)[0]
        return self

    @classmethod
    def from_residual(cls, name: str, residual, anchor: str = "", **evidence) -> "Certificate":
        """Exact identity verdict: pass iff the residual is zero."""
        zero = residual.is_zero()
        if not zero:
            evidence["residual"] = str(residual)
        return cls(
            name=name,
            kind=CertificateKind.EXACT_IDENTITY,
            verdict=Verdict.PASS if zero else Verdict.FAIL,
            anchor=anchor,
            evidence=evidence,
        )

    @classmethod
    def composite(cls, name: str, kind: "CertificateKind", parts: List["Certificate"], anchor: str = "", **evidence) -> "Certificate":
        """Passes iff every part passes; a failing part outranks an inconclusive one."""
        verdicts = {p.verdict for p in parts}
        if Verdict.FAIL in verdicts:
            verdict = Verdict.FAIL
        elif Verdict.INCONCLUSIVE in verdicts or not parts:
            verdict = Verdict.INCONCLUSIVE
        else:
            verdict = Verdict.PASS
        return cls(name=name, kind=kind, verdict=verdict, anchor=anchor, evidence=evidence, parts=parts)


Certificate.model_rebuild()

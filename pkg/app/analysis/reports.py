"""
Verification reports.

Every harness returns a report saying what was checked, how many checks ran
and whether all of them held.  A failing report carries witnesses that can be
replayed from the command line.
"""
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class Witness(BaseModel):
    first: str
    second: Optional[str] = None
    degree: Optional[int] = None
    note: str = ""


class VerificationReport(BaseModel):
    check: str
    scope: Dict[str, Any] = Field(default_factory=dict)
    checks_run: int = 0
    passed: bool = True
    witnesses: List[Witness] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)

    def fail(self, witness: Witness) -> None:
        self.passed = False
        self.witnesses.append(witness)

    def finalize(self) -> "VerificationReport":
        """Order witnesses so that reruns produce identical reports."""
        self.witnesses.sort(key=lambda w: (w.degree if w.degree is not None else -1, w.first, w.second or "", w.note))
        return self

    def to_json(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")


def summary_rows(report: VerificationReport) -> List[Dict[str, str]]:
    """Flat rows for CSV output: one per witness, or a single summary row."""
    base = {"check": report.check, "passed": str(report.passed), "checks_run": str(report.checks_run)}
    if not report.witnesses:
        return [{**base, "first": "", "second": "", "degree": "", "note": ""}]
    return [
        {
            **base,
            "first": w.first,
            "second": w.second or "",
            "degree": "" if w.degree is None else str(w.degree),
            "note": w.note,
        }
        for w in report.witnesses
    ]

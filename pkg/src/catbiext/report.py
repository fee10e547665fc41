"""Structured pass/fail reports for the coherence checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of a checker: status with equation-level witnesses.

    status is "pass", "fail" or "error"; witnesses is a list of
    (equation-id, input-tuple) pairs, nonempty exactly when status is
    "fail". classification optionally carries invariant factors plus
    coordinates; timing_ms is filled by the CLI on request.
    """

    status: str
    witnesses: list = field(default_factory=list)
    classification: dict | None = None
    timing_ms: float | None = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    @staticmethod
    def passed() -> "Report":
        return Report("pass")

    @staticmethod
    def failed(witnesses: list) -> "Report":
        if not witnesses:
            raise ValueError("a failing report needs at least one witness")
        return Report("fail", list(witnesses))

    def merge(self, other: "Report") -> "Report":
        if self.status == "error" or other.status == "error":
            return Report("error", self.witnesses + other.witnesses)
        if self.ok and other.ok:
            return Report.passed()
        return Report.failed(self.witnesses + other.witnesses)

    def to_dict(self) -> dict:
        out = {
            "status": self.status,
            "witnesses": [
                {"equation": eq, "input": list(tup)} for eq, tup in self.witnesses
            ],
        }
        if self.classification is not None:
            out["classification"] = self.classification
        if self.timing_ms is not None:
            out["timing_ms"] = self.timing_ms
        return out

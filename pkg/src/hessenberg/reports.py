"""Machine-diffable pass/fail reports shared by the verification operations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckReport:
    """Outcome of one identity check; failures list every mismatch, never just the first."""

    name: str
    params: dict[str, Any]
    passed: bool
    conjecture: bool = False
    failures: list[dict[str, Any]] = field(default_factory=list)

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "check": self.name,
            "params": self.params,
            "passed": self.passed,
            "conjecture": self.conjecture,
            "failures": self.failures,
        }


def report_from_failures(
    name: str, params: dict, failures: list[dict], conjecture: bool = False
) -> CheckReport:
    return CheckReport(name, params, not failures, conjecture, failures)


def mismatch(location: dict, expected, actual) -> dict:
    """One failure entry: where, the reference value, and the value under test."""
    return {"location": location, "expected": expected, "actual": actual}

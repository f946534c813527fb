"""Structured verification outcomes and their JSON form."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

REPORT_VERSION = "1"

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped-degenerate"


@dataclass
class Check:
    """One named sub-identity inside a report."""

    name: str
    passed: bool | None  # None means skipped
    witness: str = ""


@dataclass
class VerificationReport:
    theorem: str
    inputs: dict[str, str]
    status: str
    lhs: str = ""
    rhs: str = ""
    notes: list[str] = field(default_factory=list)
    checks: list[Check] = field(default_factory=list)
    version: str = REPORT_VERSION

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> VerificationReport:
        data = dict(data)
        data["checks"] = [Check(**c) for c in data.get("checks", [])]
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> VerificationReport:
        return cls.from_dict(json.loads(text))


def summarize_checks(theorem: str, inputs: dict[str, str], checks: list[Check],
                     notes: list[str] | None = None) -> VerificationReport:
    """Fold a list of checks into one report: fail if any failed, skipped if
    none ran, pass otherwise."""
    ran = [c for c in checks if c.passed is not None]
    if any(c.passed is False for c in ran):
        status = FAIL
    elif not ran:
        status = SKIPPED
    else:
        status = PASS
    return VerificationReport(theorem, inputs, status, notes=list(notes or []), checks=checks)

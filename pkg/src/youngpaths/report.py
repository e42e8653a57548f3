"""Verification reports with a stable JSON layout.

Integers are serialized as decimal strings so arbitrarily large values
round-trip exactly.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .partition import Partition


@dataclass(frozen=True)
class Check:
    """One evaluated claim: ``value`` was computed, ``expected`` is what the theorem says."""

    name: str
    params: dict[str, Any]
    value: int
    expected: int

    @property
    def passed(self) -> bool:
        return self.value == self.expected

    def to_dict(self) -> dict[str, Any]:
        doc: dict[str, Any] = dict(self.params)
        if self.name == "det-one":
            doc["det"] = str(self.value)
        else:
            doc["identity"] = self.name
            doc["lhs"] = str(self.value)
            doc["rhs"] = str(self.expected)
        doc["pass"] = self.passed
        return doc

    def describe(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        verdict = "ok" if self.passed else "FAIL"
        return f"{self.name} {params}: {self.value} (expected {self.expected}) {verdict}"


@dataclass(frozen=True)
class VerificationReport:
    partition: Partition | None
    checks: list[Check] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    subject: dict[str, Any] | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def merged(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(
            self.partition,
            self.checks + other.checks,
            self.skipped + other.skipped,
            self.subject,
        )

    def to_dict(self) -> dict[str, Any]:
        doc: dict[str, Any] = {}
        if self.partition is not None:
            doc["partition"] = list(self.partition.parts)
        if self.subject is not None:
            doc.update(self.subject)
        doc["checks"] = [c.to_dict() for c in self.checks]
        if self.skipped:
            doc["skipped"] = list(self.skipped)
        doc["pass"] = self.passed
        return doc

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def render(self) -> str:
        head = f"partition {self.partition.parts}" if self.partition is not None else ""
        if self.subject:
            head = " ".join([head] + [f"{k}={v}" for k, v in self.subject.items()]).strip()
        lines = [head] if head else []
        lines += ["  " + c.describe() for c in self.checks]
        lines += [f"  skipped: {s}" for s in self.skipped]
        lines.append(f"  {'PASS' if self.passed else 'FAIL'} ({len(self.checks)} checks)")
        return "\n".join(lines)

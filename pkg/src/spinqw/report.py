"""Verification reports shared by the Yang-Baxter checker and identity suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    name: str
    mode: str  # "exact" | "numeric"
    seed: object = None
    trials: int = 0
    instances: int = 0
    failures: list = field(default_factory=list)
    max_deviation: float | None = None
    point: str = ""
    notes: list = field(default_factory=list)
    skipped: bool = False

    MAX_RECORDED_FAILURES = 10

    @property
    def passed(self) -> bool:
        return not self.failures and not self.skipped

    def record_failure(self, detail: str):
        if len(self.failures) < self.MAX_RECORDED_FAILURES:
            self.failures.append(detail)
        else:
            self.failures[-1] = "... more failures suppressed"

    def bump_deviation(self, dev: float):
        if self.max_deviation is None or dev > self.max_deviation:
            self.max_deviation = dev

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "mode": self.mode,
            "seed": self.seed,
            "trials": self.trials,
            "instances": self.instances,
            "failures": list(self.failures),
            "max_deviation": self.max_deviation,
            "point": self.point,
            "notes": list(self.notes),
            "skipped": self.skipped,
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """Associative combination of reports for the same identity."""
        out = VerificationReport(self.name, self.mode, self.seed)
        out.trials = self.trials + other.trials
        out.instances = self.instances + other.instances
        out.failures = (self.failures + other.failures)[: self.MAX_RECORDED_FAILURES]
        devs = [d for d in (self.max_deviation, other.max_deviation) if d is not None]
        out.max_deviation = max(devs) if devs else None
        out.notes = self.notes + other.notes
        out.skipped = self.skipped or other.skipped
        return out

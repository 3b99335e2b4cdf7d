from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of a batch of checks; failures keep their order of discovery."""

    name: str
    passed: bool = True
    checked: int = 0
    failures: list = field(default_factory=list)
    inconclusive: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def fail(self, item) -> None:
        self.passed = False
        self.failures.append(item)

    @property
    def first_failure(self):
        return self.failures[0] if self.failures else None

    @property
    def decided(self) -> bool:
        return not self.inconclusive

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "n_failures": len(self.failures),
            "first_failure": self.first_failure,
            "inconclusive": self.inconclusive,
            **self.details,
        }

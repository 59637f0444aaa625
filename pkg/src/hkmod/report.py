"""Structured pass/fail reports for multi-step verifications."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    """One named condition with the values it was decided on."""

    name: str
    passed: bool
    data: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "data": self.data}


@dataclass(frozen=True)
class TheoremReport:
    """Ordered checks plus reported (non-gating) values; the verdict is
    the conjunction of the checks alone."""

    theorem: str
    checks: tuple[Check, ...]
    data: dict = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "verdict": self.verdict,
            "checks": [c.to_json_dict() for c in self.checks],
            "data": self.data,
        }

"""PASS/FAIL report lines shared by the verification suites and the scenario runner."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


EXACT = "exact"


class Expectation(Enum):
    """What a check asserts: the measured quantity is within tolerance, or resolvably nonzero."""
    PASS = "pass"
    NONZERO = "nonzero"


def format_value(value: float | str) -> str:
    if isinstance(value, str):
        return value
    return f"{value:.6e}"


@dataclass(frozen=True)
class CheckLine:
    name: str
    passed: bool
    measured: str
    tolerance: str = ""
    expectation: Expectation = Expectation.PASS
    detail: str = ""

    @classmethod
    def compare(cls, name: str, measured: float, tolerance: float,
                expectation: Expectation = Expectation.PASS, detail: str = "") -> CheckLine:
        """PASS when measured <= tolerance, or measured > tolerance for an expected-nonzero check."""
        within = measured <= tolerance
        passed = within if expectation is Expectation.PASS else not within
        return cls(name, passed, format_value(measured), format_value(tolerance), expectation, detail)

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        parts = [f"{status} {self.name}", f"measured={self.measured}"]
        if self.tolerance == EXACT:
            parts.append("required=0" if self.expectation is Expectation.PASS else "required!=0")
        elif self.tolerance:
            comparison = "<=" if self.expectation is Expectation.PASS else ">"
            parts.append(f"required{comparison}{self.tolerance}")
        if self.expectation is Expectation.NONZERO:
            parts.append("[expected-nonzero]")
        if self.detail:
            parts.append(f"({self.detail})")
        return " ".join(parts)


@dataclass(frozen=True)
class CheckReport:
    title: str
    lines: tuple[CheckLine, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(line.passed for line in self.lines)

    def render(self) -> str:
        passed = sum(line.passed for line in self.lines)
        body = [f"== {self.title} =="] + [line.render() for line in self.lines]
        body.append(f"{passed}/{len(self.lines)} checks passed")
        return "\n".join(body)

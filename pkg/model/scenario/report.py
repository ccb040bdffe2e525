"""Run reports: check sections plus a digest identifying what was run."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Mapping

from model.reports import CheckReport


def digest_of(parameters: Mapping[str, Any]) -> str:
    text = json.dumps(parameters, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class RunReport:
    """Deterministic for a fixed input and build; timings are kept out of render()."""
    title: str
    digest: str
    sections: tuple[CheckReport, ...]
    timings: Mapping[str, float] = field(default_factory=dict, compare=False)

    @property
    def passed(self) -> bool:
        return all(section.passed for section in self.sections)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def failures(self) -> list[str]:
        return [f"{section.title}: {line.name}" for section in self.sections
                for line in section.lines if not line.passed]

    def render(self) -> str:
        parts = [f"# {self.title}", f"digest: {self.digest}", ""]
        for section in self.sections:
            parts += [section.render(), ""]
        checks = sum(len(section.lines) for section in self.sections)
        failed = len(self.failures())
        parts.append(f"RESULT: {'PASS' if self.passed else 'FAIL'} ({checks - failed}/{checks} checks passed)")
        return "\n".join(parts) + "\n"

"""Run reports: deterministic check listings with the elapsed time confined
to the footer."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class RunReport:
    command: str
    lines: list[str] = field(default_factory=list)
    checks: list[CheckResult] = field(default_factory=list)
    elapsed: float | None = None

    def add_line(self, text: str) -> None:
        self.lines.append(text)

    def add_check(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, passed, detail))

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    def render(self, include_elapsed: bool = True) -> str:
        out = [f"command: {self.command}"]
        out.extend(self.lines)
        for check in self.checks:
            status = "PASS" if check.passed else "FAIL"
            suffix = f"  {check.detail}" if check.detail else ""
            out.append(f"check {check.name}: {status}{suffix}")
        if self.checks:
            passed = sum(1 for check in self.checks if check.passed)
            out.append(f"checks passed: {passed}/{len(self.checks)}")
        if include_elapsed and self.elapsed is not None:
            out.append(f"elapsed: {self.elapsed:.3f}s")
        return "\n".join(out)

from __future__ import annotations

import pytest

_LINES: dict[int, list[str]] = {}


class Criterion:
    """Collects named checks for one acceptance criterion and prints the verdict."""

    def __init__(self, number: int, title: str) -> None:
        self.number = number
        self.title = title
        self.checks: list[tuple[str, bool, str]] = []

    def check(self, label: str, ok: bool, detail: str = "") -> bool:
        self.checks.append((label, bool(ok), detail))
        return bool(ok)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def finish(self) -> None:
        verdict = "PASS" if self.passed and self.checks else "FAIL"
        lines = [f"CRITERION {self.number:2d} {verdict}  {self.title}"]
        for label, ok, detail in self.checks:
            mark = "ok  " if ok else "FAIL"
            lines.append(f"      [{mark}] {label}" + (f": {detail}" if detail else ""))
        _LINES[self.number] = lines
        print("\n".join(lines))
        failed = [label for label, ok, _ in self.checks if not ok]
        assert self.checks and not failed, f"criterion {self.number} failed: {failed}"


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_LINES):
        for line in _LINES[n]:
            terminalreporter.write_line(line)

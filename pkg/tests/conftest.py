"""Shared test fixtures and the acceptance-summary terminal hook."""

from __future__ import annotations

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def record_acceptance(name: str, passed: bool, detail: str) -> None:
    ACCEPTANCE_RESULTS.append((name, passed, detail))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"{name}: {'PASS' if passed else 'FAIL'} - {detail}")

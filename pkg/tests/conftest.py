"""Emit one status line per acceptance criterion after the run."""

from __future__ import annotations

import pytest

_results: list[tuple[str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.name.startswith("test_criterion_"):
        status = "PASS" if report.passed else "SKIP" if report.skipped else "FAIL"
        _results.append((item.name, status))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _results:
        terminalreporter.section("acceptance criteria")
        for name, status in _results:
            terminalreporter.line(f"{status}  {name}")

"""Shared pytest wiring: per-criterion verdict lines in the summary."""

import pytest

_verdicts: list[tuple[int, str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    mark = getattr(getattr(item, "function", None), "acceptance", None)
    if mark is not None:
        _verdicts.append((mark[0], mark[1], report.outcome))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for num, label, outcome in sorted(_verdicts):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num:02d} {verdict}  {label}")

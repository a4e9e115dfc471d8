import sys

import pytest

sys.path.insert(0, __file__.rsplit("/", 1)[0])

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "acceptance" in report.keywords:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))
    elif report.when == "setup" and report.skipped and "acceptance" in report.keywords:
        _acceptance.append((report.nodeid.split("::")[-1], "skipped"))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        mark = {"passed": "PASS", "failed": "FAIL"}.get(outcome, "SKIP")
        terminalreporter.write_line(f"[{mark}] {name}")

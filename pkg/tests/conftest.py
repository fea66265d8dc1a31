"""Acceptance bookkeeping: one PASS/FAIL line per criterion at the end of the run."""

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_CRITERIA: dict[int, str] = {}
_ITEMS: dict[str, int] = {}
_FAILED: set[int] = set()
_PASSED: set[int] = set()


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, name): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark is not None:
            number, name = mark.args
            _CRITERIA[number] = name
            _ITEMS[item.nodeid] = number


def pytest_runtest_logreport(report):
    number = _ITEMS.get(report.nodeid)
    if number is None:
        return
    if report.failed or report.skipped:
        _FAILED.add(number)
    elif report.when == "call":
        _PASSED.add(number)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        ok = number in _PASSED and number not in _FAILED
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {number:02d} {status} {_CRITERIA[number]}")

"""Report one PASS/FAIL line per acceptance criterion at the end of the run."""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_OUTCOMES: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    label = marker.args[0]
    detail = dict(report.user_properties).get("detail", "")
    if report.failed:
        _OUTCOMES[label] = ("FAIL", detail or str(report.longrepr).splitlines()[-1])
    elif report.when == "call" and label not in _OUTCOMES:
        _OUTCOMES[label] = ("PASS", detail)


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for label, (status, detail) in _OUTCOMES.items():
        terminalreporter.write_line(f"{status}  {label}" + (f"  ({detail})" if detail else ""))

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = getattr(report, "_criterion", None)
    if marker is None:
        return
    number, title = marker
    entry = CRITERIA.setdefault(number, {"title": title, "passed": 0, "failed": 0})
    entry["passed" if report.passed else "failed"] += 1


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        report._criterion = tuple(mark.args)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        e = CRITERIA[number]
        status = "PASS" if e["failed"] == 0 and e["passed"] > 0 else "FAIL"
        terminalreporter.write_line(
            f"criterion {number}: {status}  {e['title']}  ({e['passed']} passed, {e['failed']} failed)"
        )

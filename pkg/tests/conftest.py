import pytest

_criteria = {}


def pytest_runtest_logreport(report):
    label = getattr(report, "criterion", None)
    if label is None:
        return
    failed = report.failed or (report.when == "call" and report.skipped)
    prev = _criteria.get(label, True)
    if report.when == "call" or failed:
        _criteria[label] = prev and not failed


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker:
        outcome.get_result().criterion = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria):
        terminalreporter.write_line(f"{'PASS' if _criteria[label] else 'FAIL'}  {label}")

import pytest

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    if report.when == "call" or report.outcome != "passed":
        prev = _criteria.get(marker)
        failed = report.outcome != "passed" or (prev is not None and prev[0] == "FAIL")
        _criteria[marker] = ("FAIL" if failed else "PASS", report.duration)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        report.criterion = (mark.args[0], mark.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), (status, duration) in sorted(_criteria.items()):
        terminalreporter.write_line(f"AC{number:02d} {status}  {title}  ({duration:.2f}s)")

import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")
_results: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: acceptance criteria with runtime bounds")


def pytest_runtest_logreport(report):
    match = _CRITERION.search(report.nodeid)
    if not match:
        return
    number, name = int(match.group(1)), match.group(2)
    if report.when == "call" or report.failed:
        previous = _results.get(number)
        duration = report.duration + (previous[2] if previous else 0.0)
        outcome = "PASS" if report.passed and not (previous and previous[0] == "FAIL") else "FAIL"
        _results[number] = (outcome, name, duration)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        outcome, name, duration = _results[number]
        terminalreporter.write_line(f"{outcome} criterion {number}: {name.replace('_', ' ')} ({duration:.2f}s)")

import pytest

_ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    criterion = item.get_closest_marker("criterion")
    if criterion is None or report.when != "call":
        return
    number, tolerance = criterion.args
    summary = (item.function.__doc__ or item.name).strip().splitlines()[0]
    _ACCEPTANCE.append((number, "PASS" if report.passed else "FAIL", tolerance, summary))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, tolerance): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, status, tolerance, summary in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"criterion {number:>2}: {status}  [{tolerance}]  {summary}")

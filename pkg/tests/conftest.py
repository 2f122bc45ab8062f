import pytest

# criterion number -> (title, detail); filled in by tests/test_acceptance.py
ACCEPTANCE = {}
_OUTCOMES = {}


@pytest.fixture
def record(request):
    number = request.node.get_closest_marker("criterion").args[0]

    def put(title, detail):
        ACCEPTANCE[number] = (title, detail)

    return put


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


_numbers = {}


def pytest_runtest_logreport(report):
    number = _numbers.get(report.nodeid)
    if number is not None and (report.when == "call" or report.failed):
        _OUTCOMES[number] = _OUTCOMES.get(number, True) and report.passed


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _numbers[item.nodeid] = m.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_OUTCOMES):
        title, detail = ACCEPTANCE.get(number, ("", "did not finish"))
        status = "PASS" if _OUTCOMES[number] else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {title}  [{detail}]")

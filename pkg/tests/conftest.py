import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Call with (passed, detail) to log one acceptance line for the running test."""
    number = request.node.get_closest_marker("criterion").args[0]

    def log(passed, detail):
        ACCEPTANCE_LINES.append((number, passed, detail))
        return passed

    return log


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}")

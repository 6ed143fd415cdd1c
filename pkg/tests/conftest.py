import pytest
from hypothesis import settings

# Fixed example streams keep the suite reproducible run to run.
settings.register_profile("repro", derandomize=True)
settings.load_profile("repro")

_LINES = []


@pytest.fixture
def report_line():
    """Record one PASS/FAIL line for the terminal summary."""
    def record(label, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'}  {label}: {detail}"
        _LINES.append(line)
        print(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)

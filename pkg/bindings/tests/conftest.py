import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_recorder():
    """Collects one-line verdicts to print after the run."""
    return ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("bindings acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_recorder():
    """Collects one PASS/FAIL line per acceptance criterion for the summary."""
    return ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    """Print one PASS/FAIL line per acceptance criterion after the run."""
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance checklist")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import pytest

from sasaki.catalog import load_catalog

ACCEPTANCE_LINES = {}


@pytest.fixture(scope="session")
def cat():
    return load_catalog()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES.items()):
            terminalreporter.write_line(line)

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from brauer_dessins import census  # noqa: E402


@pytest.fixture(scope="session")
def corpus6():
    return census.corpus(6)


@pytest.fixture(scope="session")
def corpus4():
    return census.corpus(4)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)

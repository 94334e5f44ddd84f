import random

import pytest

from bivsum.difffield import DiffField


@pytest.fixture(scope="session")
def fib():
    return DiffField(1, 1)


@pytest.fixture(scope="session")
def pell():
    return DiffField(1, 2)


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    import acceptance_log
    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)

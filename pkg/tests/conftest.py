import numpy as np
import pytest

EXAMPLE = np.array([[1.0, 0.0, 1.0], [0.0, 1.0, 1.0]])

ACCEPTANCE_LINES = []


@pytest.fixture
def example():
    return EXAMPLE.copy()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

import random

import pytest

from tptoeplitz.selftest import random_params


@pytest.fixture
def rng():
    return random.Random(20261014)


@pytest.fixture
def make_params():
    return random_params


def pytest_configure(config):
    config.acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)

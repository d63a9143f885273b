import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def signed_vec(rng, n=3, lo=0.1, hi=10.0):
    mag = np.exp(rng.uniform(np.log(lo), np.log(hi), n))
    return mag * rng.choice([-1.0, 1.0], n)


def pos_vec(rng, n=3, lo=0.1, hi=10.0):
    return np.exp(rng.uniform(np.log(lo), np.log(hi), n))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)

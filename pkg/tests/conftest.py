import numpy as np
import pytest

from qdistinct.ensembles import SeededStream, sample_induced_array

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_hermitian(rng, n):
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (a + a.conj().T) / 2


def random_state(seed, n, k=None):
    return sample_induced_array(n, n if k is None else k, SeededStream(seed))

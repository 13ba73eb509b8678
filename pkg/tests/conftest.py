import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from hilbert import PointSet  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running benchmark and acceptance suites")


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def conic_six():
    # six rational points on x^2 + y^2 = z^2
    return PointSet.of([(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1), (3, 4, 5), (4, 3, 5)])


@pytest.fixture
def cuspidal_twelve():
    return PointSet.of([(t * t, t ** 3, 1) for t in range(1, 13)])

import numpy as np
import pytest

from evcopula import random_pickands, triangular, validate


@pytest.fixture
def product():
    return validate([])


@pytest.fixture
def comonotone():
    return validate([(0.5, 0.5)])


@pytest.fixture
def tent():
    """The single-vertex workhorse T with vertex (0.5, 0.75)."""
    return triangular(0.5, 0.75)


def random_suite(count, seed, max_vertices=8):
    """Deterministic list of random valid functions for bulk checks."""
    rng = np.random.default_rng(seed)
    return [
        random_pickands(int(rng.integers(0, max_vertices + 1)), int(rng.integers(2**31)))
        for _ in range(count)
    ]

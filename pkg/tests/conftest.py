import numpy as np
import pytest

from twoqubit import catalog


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture
def cnot():
    return catalog("cnot")


@pytest.fixture
def swap():
    return catalog("swap")

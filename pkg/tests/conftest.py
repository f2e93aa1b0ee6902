import numpy as np
import pytest

from zetalab import divisors


@pytest.fixture(scope="session")
def small_table() -> divisors.DivisorTable:
    return divisors.sieve(1, 100_000)


@pytest.fixture()
def rng():
    return np.random.default_rng(1729)

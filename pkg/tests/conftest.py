import pytest

from primegaps.sieve import PrimeData


@pytest.fixture(scope="session")
def data_1e5():
    return PrimeData.build(10**5)


@pytest.fixture(scope="session")
def data_1e6():
    return PrimeData.build(10**6, workers=2)

import pytest
from hypothesis import settings

from schubert import GrassmannRing

settings.register_profile("suite", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def g14():
    return GrassmannRing(1, 4)


@pytest.fixture(scope="session")
def g13():
    return GrassmannRing(1, 3)


@pytest.fixture(scope="session")
def p3():
    return GrassmannRing(0, 3)

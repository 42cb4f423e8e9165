import pytest

from quasihopf.acceptance import PaperSuite
from quasihopf.exactfield import gaussian, prime_field, rationals


@pytest.fixture(scope="session")
def QI():
    return gaussian()


@pytest.fixture(scope="session")
def QQ():
    return rationals()


@pytest.fixture(scope="session")
def F5():
    return prime_field(5)


@pytest.fixture(scope="session")
def suite():
    """Shared lazily-built corpus of fixtures and derived objects."""
    return PaperSuite()

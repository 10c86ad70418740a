"""Shared fixtures for the pnheights test-suite."""

import pytest

from pnheights.arithmetic.prime_tuple import PrimeTuple
from pnheights.core_utils.config_manager import PNConfig
from pnheights.core_utils.logger import Logger


@pytest.fixture(autouse=True)
def quiet_logging():
    """Every test starts and ends with console-only WARNING logging."""
    Logger.configure("WARNING", None)
    yield
    Logger.configure("WARNING", None)


@pytest.fixture
def example_triple():
    """The worked three-prime example: 5, 11, 23."""
    return PrimeTuple((5, 11, 23))


@pytest.fixture
def height_two_tuple():
    """Four primes whose P_N has a coefficient -2 at x^233."""
    return PrimeTuple((5, 7, 11, 13))


@pytest.fixture
def config():
    """Defaults with a clean environment."""
    return PNConfig()

"""
Shared test configuration and fixtures.

This module provides common fixtures and setup for all test modules
in the categorical quantum protocols test suite.
"""

import os
import sys
import pytest

# Add project root to Python path for all tests
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from generators import make_rng
from scalar_rings import BOOLEAN, COMPLEX_ROOT_TWO
from teleportation_base import make_bell_base


@pytest.fixture(autouse=True)
def mock_env_base():
    """
    Base fixture to ensure environment variables are clean for each test.
    This runs automatically for all tests.
    """
    # Store existing environment variables
    existing_vars = {}
    env_vars = [
        "CQP_SEMIRING",
        "CQP_SEED",
        "CQP_COUNT",
        "CQP_FORMAT",
    ]

    for var in env_vars:
        if var in os.environ:
            existing_vars[var] = os.environ[var]
            del os.environ[var]

    yield

    # Restore environment variables
    for var, value in existing_vars.items():
        os.environ[var] = value


@pytest.fixture
def field():
    """The complex instance Q(i, √2)"""
    return COMPLEX_ROOT_TWO


@pytest.fixture
def rel():
    """The Boolean instance, the scalars of Rel"""
    return BOOLEAN


@pytest.fixture(params=[BOOLEAN, COMPLEX_ROOT_TWO], ids=lambda sr: sr.name)
def semiring(request):
    """Each semiring in turn"""
    return request.param


@pytest.fixture
def rng():
    """A fixed-seed generator"""
    return make_rng(1234)


@pytest.fixture(scope="session")
def bell_base():
    """The Bell teleportation base over Q(i, √2)"""
    return make_bell_base(COMPLEX_ROOT_TWO)


@pytest.fixture
def capsys_reset(capsys):
    """Reset captured output before each test"""
    capsys.readouterr()
    return capsys

"""
Pytest fixtures and configuration.

Provides shared fixtures for chevcheck tests: small finite fields, the G2
root system and Chevalley form, G2 reduced over GF(2) and GF(4), and a lab
over GF(4) holding the characteristic 2 objects.
"""
import json

import pytest

from chevcheck.algebra import chevalley_build, field_make, rootsystem_build
from chevcheck.scenarios import G2Lab
from tests.config import test_config


@pytest.fixture
def config():
    """Test configuration from environment variables."""
    return test_config


@pytest.fixture
def golden(config):
    """Load a golden JSON file by name."""
    def _load(name: str):
        with open(config.golden_dir / name, encoding="utf-8") as f:
            return json.load(f)

    return _load


@pytest.fixture(scope="session")
def gf2():
    return field_make(2)


@pytest.fixture(scope="session")
def gf4():
    return field_make(2, 2)


@pytest.fixture(scope="session")
def gf16():
    return field_make(2, 4)


@pytest.fixture(scope="session")
def g2():
    return rootsystem_build("G", 2)


@pytest.fixture(scope="session")
def g2_form(g2):
    return chevalley_build(g2)


@pytest.fixture(scope="session")
def lie2(g2_form, gf2):
    """G2 over GF(2)."""
    return g2_form.reduce(gf2)


@pytest.fixture(scope="session")
def lie4(g2_form, gf4):
    """G2 over GF(4)."""
    return g2_form.reduce(gf4)


@pytest.fixture(scope="session")
def lab4():
    """Shared G2 objects over GF(4); M(F_4) and H are cached on first use."""
    return G2Lab.for_order(4, test_config.budget)


@pytest.fixture(scope="session")
def lab2():
    return G2Lab.over(field_make(2), test_config.budget)

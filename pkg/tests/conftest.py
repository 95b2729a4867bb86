"""
Reusable fixtures and helpers for all tests
"""

import numpy
import pytest

from gelfand_cetlin_cli.config import config
from gelfand_cetlin_cli.flagcombi import FlagType
from gelfand_cetlin_cli.gcpoly import build_polytope
from gelfand_cetlin_cli.potential import build_potential


FLAG_3 = FlagType.full(3)
FLAG_2 = FlagType.full(2)
GR_2_4 = FlagType.grassmannian(2, 4)


@pytest.fixture(autouse=True)
def no_log_files(monkeypatch):
    """
    Keep test runs from writing log files into the data directory
    """
    monkeypatch.setitem(config["logging"], "write_logs", False)


@pytest.fixture(scope="session")
def flag3_poly():
    """
    GC polytope of F(1,2,3) with lambda = (2, 0, -2), top-down coordinates
    """
    return build_polytope(FLAG_3, (2, 0, -2), "top-down")


@pytest.fixture(scope="session")
def gr24_poly():
    """
    GC polytope of Gr(2,4) with lambda = (1, 1, -1, -1), top-down coordinates
    """
    return build_polytope(GR_2_4, (1, 1, -1, -1), "top-down")


@pytest.fixture(scope="session")
def flag2_poly():
    """
    GC polytope of P^1 = F(1,2) with lambda = (1, 0)
    """
    return build_polytope(FLAG_2, (1, 0), "top-down")


@pytest.fixture(scope="session")
def flag3_potential(flag3_poly):
    return build_potential(flag3_poly)


@pytest.fixture(scope="session")
def gr24_potential(gr24_poly):
    return build_potential(gr24_poly)


@pytest.fixture(scope="session")
def flag2_potential(flag2_poly):
    return build_potential(flag2_poly)


@pytest.fixture
def rng():
    """
    Seeded generator so random cases repeat between runs
    """
    return numpy.random.default_rng(20240521)

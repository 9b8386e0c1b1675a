"""Shared fixtures: named spaces and the configured sweep size."""
import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

from sepax.catalog.constructors import attachment_space, khalimsky_interval, open_point_space, sierpinski  # noqa: E402
from sepax.config import EngineConfig  # noqa: E402
from sepax.spaces.core import antidiscrete_space, discrete_space  # noqa: E402

SPACES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "spaces")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: five-point sweeps, run only with SEPAX_MAX_POINTS=5")


def pytest_collection_modifyitems(config, items):
    if os.environ.get("SEPAX_MAX_POINTS") == "5":
        return
    skip = pytest.mark.skip(reason="set SEPAX_MAX_POINTS=5 to run five-point sweeps")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def s2():
    return sierpinski(2)


@pytest.fixture
def s3():
    return sierpinski(3)


@pytest.fixture
def khalimsky3():
    return khalimsky_interval(-1, 1)


@pytest.fixture
def attachment():
    return attachment_space()


@pytest.fixture
def open_point3():
    return open_point_space(3)


@pytest.fixture
def antidiscrete2():
    return antidiscrete_space(2)


@pytest.fixture
def discrete3():
    return discrete_space(3)


@pytest.fixture
def config():
    return EngineConfig()


@pytest.fixture
def spaces_dir():
    return SPACES_DIR

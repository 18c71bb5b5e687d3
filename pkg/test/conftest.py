import random

import numpy
import pytest

# ruff: noqa: E402
from latticeburgers.base import config as _config

_config._CONFIG_IMMUTABLE = False

from latticeburgers.lattice.grid import Grid, build_exponential, build_orthogonal

from .lattices import skewed

RANDOM_SEED = 42
random.seed(RANDOM_SEED)
numpy.random.seed(RANDOM_SEED)


@pytest.fixture
def orthogonal() -> Grid:
    return build_orthogonal(a=0.1, b=0.1, x0=0.0, y0=0.1, N=8, M=8)


@pytest.fixture
def exponential() -> Grid:
    return build_exponential(a=0.1, a0=0.0, b=0.1, b0=0.1, c=0.15, N=8, M=8)


@pytest.fixture
def schwarzian() -> Grid:
    return skewed()

import math

import pytest
from click.testing import CliRunner

from csecs import create_cli
from csecs.config import config as config_classes
from csecs.models.fock_oracle import default_truncation


INV_SQRT2 = 1 / math.sqrt(2)

STANDARD_ALPHAS = (0.3, 1.0, 1.7)
STANDARD_TS = (0.0, 0.3, INV_SQRT2, 0.9, 1.0)


def r_of(t):
    return math.sqrt(max(0.0, 1.0 - t * t))


@pytest.fixture
def config():
    return config_classes['testing']


@pytest.fixture
def cli():
    return create_cli('testing')


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def truncation():
    """Cutoff for a given alpha with the default heuristic."""
    return default_truncation

import random

import pytest

from thom.battery import BATTERY, battery_alphabet

DEFAULT_SEED = 20261019


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED,
                     help="seed for randomized property tests")


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed):
    return random.Random(seed)


@pytest.fixture(scope="session")
def battery():
    return {name: battery_alphabet(name) for name in BATTERY}

import random

import pytest
from hypothesis import HealthCheck, settings

from ncalg import Alphabet

settings.register_profile(
    "chenlab",
    deadline=None,
    max_examples=25,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("chenlab")


@pytest.fixture
def xy():
    return Alphabet.of("x,y")


@pytest.fixture
def xyz():
    return Alphabet.of("x,y,z")


@pytest.fixture
def rng():
    return random.Random(20240611)

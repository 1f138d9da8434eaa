import random

import pytest

from latgon.census import two_dimensional_classes

SEED = 1729


@pytest.fixture(scope="session")
def census13():
    levels = two_dimensional_classes(13)
    return [P for n in sorted(levels) for P in levels[n]]


@pytest.fixture
def rng():
    return random.Random(SEED)

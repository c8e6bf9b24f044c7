import random

import pytest

from blockerlab.graph import Graph


@pytest.fixture
def paw() -> Graph:
    # Triangle 0-1-2 with pendant 3 attached to 2.
    return Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0)

import random

import pytest

from delpezzo.collection import Collection, braid_left, braid_right, from_data
from delpezzo.fixtures import SURFACE_IDS, all_fixtures, fixture


@pytest.fixture
def p2_standard():
    return from_data("P2", [[1, [0]], [1, [1]], [1, [2]]])


@pytest.fixture
def quadric_standard():
    return from_data("P1xP1", [[1, [0, 0]], [1, [0, 1]], [1, [1, 0]], [1, [1, 1]]])


def fixture_collection(kind, label):
    return fixture(kind, label).collection().without_blocks()


def random_braid_walk(coll, steps, rng, reset=12):
    """Iterator of collections along random braid walks; restarts from the
    base collection every `reset` steps so class entries stay small."""
    cur = coll
    for k in range(steps):
        if reset and k % reset == reset - 1:
            cur = coll
        b = rng.randrange(1, len(cur) + 1)
        cur = braid_right(cur, b) if rng.random() < 0.5 else braid_left(cur, b)
        yield cur

import itertools
import random

import pytest

from delpezzo.mutation import quiver_of
from delpezzo.quiver import (Quiver, QuiverError, dwz_mutate, plucker_holds,
                             reduced_quiver, relabel)

from conftest import fixture_collection


P2_QUIVER = Quiver(((0, 3, -3), (-3, 0, 3), (3, -3, 0)))


def test_antisymmetry_enforced():
    with pytest.raises(QuiverError):
        Quiver(((0, 1), (1, 0)))
    with pytest.raises(QuiverError):
        Quiver(((1, 0), (0, 1)))


def test_dwz_example():
    q = dwz_mutate(P2_QUIVER, 0)
    assert q.c == ((0, -3, 3), (3, 0, -6), (-3, 6, 0))


def test_dwz_involution():
    rng = random.Random(2)
    for _ in range(50):
        n = rng.randrange(3, 6)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                rows[i][j] = rng.randrange(-4, 5)
                rows[j][i] = -rows[i][j]
        q = Quiver(tuple(tuple(r) for r in rows))
        v = rng.randrange(n)
        assert dwz_mutate(dwz_mutate(q, v), v).c == q.c


def test_plucker_on_fixtures():
    for kind, label in [("X1", (4, 1)), ("X2", (4, 2)), ("X4", (4, 4)),
                        ("X5", (4, 8)), ("X8", (3, 15))]:
        q = quiver_of(fixture_collection(kind, label))
        assert plucker_holds(q)


def test_plucker_negative():
    n = 4
    rows = [[0] * n for _ in range(n)]
    vals = {(0, 1): 1, (0, 2): 1, (0, 3): 1, (1, 2): 1, (1, 3): 1, (2, 3): 1}
    for (i, j), v in vals.items():
        rows[i][j], rows[j][i] = v, -v
    assert not plucker_holds(Quiver(tuple(tuple(r) for r in rows)))


def test_reduced_quiver():
    c = fixture_collection("P1xP1", (3, 2))
    q = quiver_of(c)
    red = reduced_quiver(q, (1, 2, 1))
    assert red.c == ((0, 2, -4), (-2, 0, 2), (4, -2, 0))
    assert red.alphas == (1, 2, 1)
    with pytest.raises(QuiverError):
        reduced_quiver(q, (2, 2))


def test_relabel():
    q = relabel(P2_QUIVER, (1, 2, 0))
    assert q.c[1][2] == 3 and q.c[2][0] == 3 and q.c[0][1] == 3

"""Randomized property suites over braid walks and mutation walks."""
import random
from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from delpezzo.collection import (braid_left, braid_right, gram_matrix,
                                 is_very_strong, tensor_line_bundle)
from delpezzo.fixtures import all_fixtures
from delpezzo.mutation import quiver_mutate_left, quiver_mutate_right, quiver_of
from delpezzo.polygon import (area_x2, is_convex, polygon_of,
                              very_strong_via_polygon)
from delpezzo.quiver import plucker_holds

from conftest import fixture_collection, random_braid_walk

BASES = [("P2", (3, 1)), ("P1xP1", (3, 2)), ("X1", (4, 1)), ("X2", (4, 2)),
         ("X3", (3, 3)), ("X4", (4, 6)), ("X5", (3, 7)), ("X6", (3, 9)),
         ("X7", (3, 12)), ("X8", (3, 17))]


def test_braid_relations_randomized():
    rng = random.Random(101)
    cases = 0
    for kind, label in BASES[:6]:
        base = fixture_collection(kind, label)
        for c in random_braid_walk(base, 20, rng):
            n = len(c)
            i = rng.randrange(1, n - 1)
            lhs = braid_left(braid_left(braid_left(c, i), i + 1), i)
            rhs = braid_left(braid_left(braid_left(c, i + 1), i), i + 1)
            assert lhs.objects == rhs.objects
            j = rng.randrange(1, n + 1)
            assert braid_right(braid_left(c, j), j).objects == c.objects
            cases += 2
    assert cases >= 200


def test_plucker_on_mutation_walks():
    rng = random.Random(202)
    cases = 0
    for kind, label in BASES:
        c = fixture_collection(kind, label)
        base = c
        for _ in range(6):
            i = rng.randrange(len(c))
            c = quiver_mutate_right(c, i)
            q = quiver_of(c)
            n = q.n
            for t in combinations(range(n), 4):
                a, b, cc, d = t
                assert q.c[a][b] * q.c[cc][d] - q.c[a][cc] * q.c[b][d] \
                    + q.c[a][d] * q.c[b][cc] == 0
                cases += 1
            if c.total_rank() > 60:
                c = base
    assert cases >= 200


def test_area_equals_rank_square_sum():
    rng = random.Random(303)
    cases = 0
    for kind, label in BASES:
        c = fixture_collection(kind, label)
        base = c
        for _ in range(6):
            i = rng.randrange(len(c))
            c = quiver_mutate_left(c, i if i >= 1 else len(c))
            assert area_x2(polygon_of(c)) == sum(e.r ** 2 for e in c.objects)
            cases += 1
            if c.total_rank() > 60:
                c = base
    for kind, label in BASES[:4]:
        base = fixture_collection(kind, label)
        walk = random_braid_walk(base, 10 ** 6, rng)
        counted = 0
        while counted < 50:
            c = next(walk)
            if any(e.r <= 0 for e in c.objects):
                continue
            assert area_x2(polygon_of(c)) == sum(e.r ** 2 for e in c.objects)
            counted += 1
        cases += counted
    assert cases >= 200


def test_vertex_primitivity_randomized():
    rng = random.Random(404)
    cases = 0
    for kind, label in BASES[:6]:
        base = fixture_collection(kind, label)
        for c in random_braid_walk(base, 40, rng):
            if any(e.r <= 0 for e in c.objects):
                continue
            p = polygon_of(c)
            for v in p.vertices:
                assert gcd(abs(int(v[0])), abs(int(v[1]))) == 1
                cases += 1
    assert cases >= 200


def test_convexity_iff_very_strong_randomized():
    rng = random.Random(505)
    cases = 0
    for kind, label in BASES:
        base = fixture_collection(kind, label)
        per_surface = 0
        walk = random_braid_walk(base, 10 ** 6, rng, reset=8)
        while per_surface < 200:
            c = next(walk)
            if any(e.r <= 0 for e in c.objects):
                continue
            assert very_strong_via_polygon(c) == is_very_strong(c)
            per_surface += 1
        cases += per_surface
    assert cases >= 2000


def test_gram_invariance_under_twist_randomized():
    rng = random.Random(606)
    for kind, label in BASES[:5]:
        c = fixture_collection(kind, label)
        s = c.surface
        for _ in range(40):
            ell = tuple(rng.randrange(-2, 3) for _ in range(s.picard_rank))
            assert gram_matrix(tensor_line_bundle(c, ell)) == gram_matrix(c)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2), st.integers(1, 3), st.integers(0, 1))
def test_braid_inverse_hypothesis(start, index, direction):
    c = fixture_collection("P2", (3, 1))
    for _ in range(start):
        c = braid_left(c, 2)
    op1, op2 = (braid_left, braid_right) if direction else (braid_right, braid_left)
    assert op2(op1(c, index), index).objects == c.objects

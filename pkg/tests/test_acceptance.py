"""Acceptance suite: one test per release criterion, each printing a
pass/fail line.  All arithmetic is exact; every tolerance is zero.
"""
import random
import time
from itertools import combinations

import pytest

from delpezzo.collection import (detect_blocks, from_data, gram_matrix,
                                 is_very_strong, rotate_to_unbroken)
from delpezzo.fixtures import SURFACE_IDS, all_fixtures, load_surface_fixtures
from delpezzo.mutation import (apply_mutation_sequence, dwz_consistent,
                               is_minimal, quiver_mutate_left_tracked,
                               quiver_mutate_right_tracked,
                               reduce_to_block_complete)
from delpezzo.polygon import (area_delta_sign, area_x2, cross, is_convex,
                              polygon_of, polygon_quiver_mutate_left,
                              polygon_quiver_mutate_right, unimodular_aligned,
                              very_strong_via_polygon)
from delpezzo.verify import (fixture_candidate_key, verify_certificates,
                             verify_relations, verify_tables)

from conftest import fixture_collection, random_braid_walk


def _report(name, ok, extra=""):
    print(f"\n[acceptance] {name}: {'PASS' if ok else 'FAIL'} {extra}")
    assert ok, name


def test_fixture_verification():
    t0 = time.time()
    report = verify_tables()
    elapsed = time.time() - t0
    labels = len(all_fixtures())
    ok = report.ok and labels >= 30 and elapsed < 10
    _report("fixture verification",
            ok, f"({labels} labels, {len(report.checks)} checks, {elapsed:.2f}s)")


def test_polygon_oracle():
    # Independent construction on the plane: chi between line bundles O(a),
    # O(b) on the plane is the binomial count of degree-(b-a) monomials in
    # three variables; classes live in the basis ([O], [O(1)], [O(2)]).
    def chi_pair(a, b):
        d = b - a
        return (d + 1) * (d + 2) // 2

    B = [[chi_pair(i, j) for j in range(3)] for i in range(3)]

    def chi(u, v):
        return sum(u[i] * B[i][j] * v[j] for i in range(3) for j in range(3))

    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]

    def right_mutate(e, f):  # [R_f e] = [e] - chi(e,f) [f]
        k = chi(e, f)
        return tuple(x - k * y for x, y in zip(e, f))

    duals = []
    for i in range(3):
        x = basis[i]
        for j in range(i + 1, 3):
            x = right_mutate(x, basis[j])
        duals.append(x)
    rank = lambda u: sum(u)
    degree = lambda u: 3 * (u[1] + 2 * u[2])
    verts = []
    acc = (0, -1)
    for i in range(3):
        acc = (acc[0] + rank(duals[i]), acc[1] + degree(duals[i]))
        verts.append(acc)
    shoelace = sum(verts[i - 1][0] * verts[i][1] - verts[i - 1][1] * verts[i][0]
                   for i in range(3))

    expected = ((1, 8), (-1, -7), (0, -1))
    c = from_data("P2", [[1, [0]], [1, [1]], [1, [2]]])
    p = polygon_of(c)
    ok = (tuple(verts) == expected
          and p.vertices == expected
          and unimodular_aligned(p, p)
          and p.vertices[-1] == (0, -1)
          and all(cross(p.vertices[i - 1], p.vertices[i]) == 1 for i in range(3))
          and shoelace == 3 and area_x2(p) == 3)
    _report("polygon oracle", ok, f"(vertices {p.vertices})")


def test_mutation_consistency():
    rng = random.Random(8128)
    steps = mismatches = 0
    t0 = time.time()
    starts = [e for e in all_fixtures()]
    cursors = {}
    while steps < 500:
        entry = starts[rng.randrange(len(starts))]
        key = (entry.surface, entry.label)
        c = cursors.get(key)
        if c is None or c.total_rank() > 64:
            c = entry.collection().without_blocks()
        i = rng.randrange(len(c))
        side = rng.random() < 0.5
        p = polygon_of(c)
        if side:
            step = quiver_mutate_right_tracked(c, i, check=False)
            geometric = polygon_quiver_mutate_right(p, i)
        else:
            b = i if i >= 1 else len(c)
            step = quiver_mutate_left_tracked(c, b, check=False)
            geometric = polygon_quiver_mutate_left(p, b)
        got = polygon_of(step.collection)
        route_ok = (got.vertices == geometric.vertices
                    if len(c) not in step.braids
                    else unimodular_aligned(geometric, got))
        dwz_ok = dwz_consistent(c, i) if side else True
        sign_ok = True
        if side:
            diff = step.collection.total_rank() - c.total_rank()
            sign_ok = ((diff > 0) - (diff < 0)) == area_delta_sign(p, i)
        if not (route_ok and dwz_ok and sign_ok):
            mismatches += 1
        cursors[key] = step.collection
        steps += 1
    _report("mutation consistency", mismatches == 0,
            f"({steps} steps, {mismatches} mismatches, {time.time() - t0:.1f}s)")


def test_relations():
    t0 = time.time()
    report = verify_relations()
    elapsed = time.time() - t0
    ok = report.ok and elapsed < 30
    _report("relations", ok,
            f"({len(report.checks)} relations, {elapsed:.2f}s)")


def test_certificates():
    t0 = time.time()
    report = verify_certificates()
    elapsed = time.time() - t0
    ok = report.ok and elapsed < 300
    _report("certificates", ok,
            f"({len(report.checks)} checks, {elapsed:.1f}s)")


def test_classification_reproduction():
    from delpezzo.classify import enumerate_minimal
    expected_counts = {("P2", 3): 1, ("X2", 4): 2, ("X4", 4): 4, ("X5", 4): 2,
                       ("X6", 4): 0, ("X7", 4): 0, ("X8", 4): 0}
    ok = True
    details = []
    for kind in SURFACE_IDS:
        t0 = time.time()
        table = {}
        for e in load_surface_fixtures(kind):
            table.setdefault(e.label[0], set()).add(fixture_candidate_key(e))
        for k in (3, 4):
            got = {c.canonical_key() for c in enumerate_minimal(kind, k)}
            want = table.get(k, set())
            if got != want:
                ok = False
                details.append(f"{kind} k={k}: got {len(got)} want {len(want)}")
            if (kind, k) in expected_counts:
                if len(got) != expected_counts[(kind, k)]:
                    ok = False
                    details.append(f"{kind} k={k} count")
        elapsed = time.time() - t0
        if elapsed >= 600:
            ok = False
            details.append(f"{kind} too slow: {elapsed:.0f}s")
    _report("classification reproduction", ok, "; ".join(details) or "(all surfaces)")


def test_property_suites():
    # braid relations, Pluecker, primitivity, area, convexity<=>very-strong
    # live in test_properties.py with >= 200 cases each; here the block-count
    # bound is spot checked on random mutation-reduced samples
    rng = random.Random(31415)
    entries = all_fixtures()
    samples = 0
    worst = 0
    t0 = time.time()
    cursors = {}
    while samples < 10_000:
        entry = entries[rng.randrange(len(entries))]
        key = (entry.surface, entry.label)
        c = cursors.get(key)
        if c is None or c.total_rank() > 48:
            c = entry.collection().without_blocks()
        i = rng.randrange(len(c))
        c = quiver_mutate_right_tracked(c, i, check=False).collection
        cursors[key] = c
        reduced = reduce_to_block_complete(rotate_to_unbroken(c))
        samples += 1
        if is_minimal(reduced):
            k = len(reduced.blocks)
            worst = max(worst, k)
            if k > 4:
                _report("block-count bound spot check", False,
                        f"found minimal {k}-block sample")
    _report("block-count bound spot check", worst <= 4,
            f"({samples} samples, max block count {worst}, "
            f"{time.time() - t0:.0f}s)")

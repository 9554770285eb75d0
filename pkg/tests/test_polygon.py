import random
from fractions import Fraction

import pytest

from delpezzo.collection import (braid_left, braid_right, from_data,
                                 is_very_strong, very_strong_or_false)
from delpezzo.polygon import (HPPolygon, PolygonError, admissible_vertices,
                              area_delta_sign, area_x2, cross,
                              earliest_opposing, forbidden_region,
                              has_parallel_long_edges, is_convex, long_edges,
                              long_edge_subdivisions, opposing_vertices,
                              origin_in_forbidden, polygon_braid_left,
                              polygon_braid_right, polygon_of, quiver_matrix,
                              shear, toric_system, unimodular_aligned,
                              very_strong_via_polygon)
from delpezzo.surfaces import surface

from conftest import fixture_collection, random_braid_walk


def test_polygon_oracle(p2_standard):
    p = polygon_of(p2_standard)
    assert p.vertices == ((1, 8), (-1, -7), (0, -1))
    assert p.vertices[-1] == (0, -1)
    assert area_x2(p) == 3
    assert p.ranks() == [1, 1, 1]
    for i in range(3):
        assert cross(p.vertices[i - 1], p.vertices[i]) == 1  # R_i = r_i^2


def test_polygon_cycle_closure_all_fixtures():
    from delpezzo.fixtures import all_fixtures
    for entry in all_fixtures():
        c = entry.collection().without_blocks()
        p = polygon_of(c)
        assert p.vertices[-1] == (0, -1)
        assert area_x2(p) == sum(e.r ** 2 for e in c.objects)
        assert p.ranks() == [e.r for e in c.objects]


def test_toric_system(p2_standard):
    ts = toric_system(p2_standard)
    assert ts == [(1,), (1,), (1,)]
    s = p2_standard.surface
    n = len(ts)
    rs = [e.r for e in p2_standard.objects]
    # defining properties
    total = tuple(sum(t[i] for t in ts) for i in range(s.picard_rank))
    assert total == tuple(-k for k in s.canonical)
    for i in range(n):
        assert s.intersect(ts[i - 1], ts[i]) == Fraction(1, rs[i] ** 2)


def test_toric_system_properties_fixture():
    c = fixture_collection("X4", (3, 5))
    s = c.surface
    ts = toric_system(c)
    rs = [e.r for e in c.objects]
    n = len(ts)
    total = tuple(sum(t[i] for t in ts) for i in range(s.picard_rank))
    assert total == tuple(-k for k in s.canonical)
    for i in range(n):
        assert s.intersect(ts[i - 1], ts[i]) == Fraction(1, rs[i] ** 2)
    # orthogonality of all cyclically non-adjacent pairs
    for i in range(n):
        for j in range(n):
            if (j - i) % n in (0, 1, n - 1):
                continue
            assert s.intersect(ts[i], ts[j]) == 0
    # r_i r_j T_ij integral, a_ij integer squares
    for i in range(n):
        for j in range(i + 1, n):
            tij = tuple(sum(ts[u][m] for u in range(i, j))
                        for m in range(s.picard_rank))
            scaled = [rs[i] * rs[j] * x for x in tij]
            assert all(f.denominator == 1 for f in map(Fraction, scaled))


def test_is_convex():
    assert is_convex(HPPolygon(((0, 0), (1, 0), (1, 1), (0, 1))))
    assert not is_convex(HPPolygon(((0, 0), (2, 0), (1, 1), (2, 2), (0, 2))))
    with pytest.raises(PolygonError):
        is_convex(HPPolygon(((0, 0), (1, 0), (1, 0), (0, 1))))


def test_convexity_iff_very_strong(quadric_standard):
    rng = random.Random(11)
    checked = 0
    for c in random_braid_walk(quadric_standard, 300, rng):
        if any(e.r <= 0 for e in c.objects):
            continue
        assert very_strong_via_polygon(c) == is_very_strong(c)
        checked += 1
    assert checked >= 200


def test_long_edges(quadric_standard):
    p = polygon_of(quadric_standard)
    assert long_edge_subdivisions(p) == [1, 2, 1]
    p2 = polygon_of(fixture_collection("P2", (3, 1)))
    assert long_edge_subdivisions(p2) == [1, 1, 1]
    # non block complete quadric example has a parallel pair
    c4 = from_data("P1xP1", [[1, [0, 0]], [1, [1, 0]], [1, [1, 1]], [1, [2, 1]]])
    assert has_parallel_long_edges(polygon_of(c4))
    assert not has_parallel_long_edges(p)


def test_quiver_matrix(p2_standard):
    p = polygon_of(p2_standard)
    q = quiver_matrix(p)
    assert q == ((0, 3, -3), (-3, 0, 3), (3, -3, 0))


def test_shear():
    assert shear((1, 8), (0, -1), (-1, -7)) == (1, 11)
    # fixed line through the origin parallel to [u, v]
    u, v = (1, 8), (0, -1)
    d = (v[0] - u[0], v[1] - u[1])
    assert shear(u, v, d) == d
    assert shear(u, v, u) == v
    with pytest.raises(PolygonError):
        shear((1, 1), (2, 2), (0, 1))


def test_polygon_braids_match_collection(p2_standard, quadric_standard):
    rng = random.Random(5)
    for base in (p2_standard, quadric_standard):
        n = len(base)
        for c in random_braid_walk(base, 25, rng):
            if any(e.r <= 0 for e in c.objects):
                continue
            p = polygon_of(c)
            for b in range(1, n + 1):
                for op, pop in ((braid_left, polygon_braid_left),
                                (braid_right, polygon_braid_right)):
                    try:
                        moved = op(c, b)
                    except Exception:
                        continue
                    if any(e.r == 0 for e in moved.objects):
                        continue
                    got = pop(p, b)
                    want = polygon_of(moved)
                    if b < n:
                        assert got.vertices == want.vertices
                    else:
                        assert unimodular_aligned(got, want)


def test_braid_then_inverse_polygon(p2_standard):
    p = polygon_of(p2_standard)
    for b in (1, 2, 3):
        assert polygon_braid_right(polygon_braid_left(p, b), b).vertices == p.vertices


def test_opposing_and_admissible(p2_standard):
    p = polygon_of(p2_standard)
    assert opposing_vertices(p, 0) == [1]
    assert p.vertices[earliest_opposing(p, 0)] == (-1, -7)
    # for a triangle every vertex opposes its far edge
    assert admissible_vertices(p) == {0, 1, 2}
    # a 4-block fixture has exactly three admissible vertices
    for label in ((4, 4), (4, 5), (4, 6), (4, 7)):
        c = fixture_collection("X4", label)
        poly = polygon_of(c)
        nonstraight = admissible_vertices(poly)
        assert len(nonstraight) == 3


def test_forbidden_region_triangle(p2_standard):
    p = polygon_of(p2_standard)
    cons = forbidden_region(p)
    assert len(cons) == 3
    assert origin_in_forbidden(p)
    # the forbidden region of a triangle is its medial triangle
    verts = p.vertices
    mids = [((Fraction(verts[i][0] + verts[j][0], 2)),
             (Fraction(verts[i][1] + verts[j][1], 2)))
            for i in range(3) for j in range(i + 1, 3)]
    for (a, b, ccc) in cons:
        assert sum(1 for m in mids if a * m[0] + b * m[1] == ccc) == 2
    from delpezzo.mutation import quiver_mutate_right
    assert not origin_in_forbidden(polygon_of(quiver_mutate_right(p2_standard, 0)))


def test_area_delta_sign(p2_standard):
    p = polygon_of(p2_standard)
    assert area_delta_sign(p, 0) > 0  # any mutation of a minimal triangle grows
    from delpezzo.mutation import quiver_mutate_right
    grown = quiver_mutate_right(p2_standard, 0)
    pg = polygon_of(grown)
    signs = [area_delta_sign(pg, i) for i in range(3)]
    assert -1 in signs  # some mutation brings the rank back down


def test_vertex_primitivity_after_mutations():
    from delpezzo.mutation import quiver_mutate_left, quiver_mutate_right
    from math import gcd
    rng = random.Random(23)
    c = fixture_collection("X3", (3, 3))
    for _ in range(25):
        i = rng.randrange(len(c))
        c = (quiver_mutate_right(c, i) if rng.random() < 0.5
             else quiver_mutate_left(c, i if i >= 1 else len(c)))
        p = polygon_of(c)
        for v in p.vertices:
            assert gcd(abs(int(v[0])), abs(int(v[1]))) == 1
        for m, e in zip(p.edges(), c.objects):
            assert m[0] % e.r == 0 and m[1] % e.r == 0


def test_render_svg(p2_standard):
    from delpezzo.svg import render_svg
    p = polygon_of(p2_standard)
    doc = render_svg(p)
    assert doc.count('class="vertex"') == 3
    assert 'class="forbidden"' not in doc
    assert doc.count('class="origin"') == 1
    doc2 = render_svg(p, show_forbidden=True, quiver=True)
    assert doc2.count('class="forbidden"') == 1
    assert doc2.count('class="arrow"') == 3
    assert doc == render_svg(p)  # deterministic

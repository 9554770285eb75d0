"""The lattice polygon attached to a full exceptional collection via the Gale
dual of its toric system, and the exact plane geometry used on it: convexity,
long edges, quivers, shears, opposing vertices, forbidden regions, areas.

Plane points are (x, y) tuples of ints or Fractions; the volume form is the
determinant.  Vertex k of a polygon stores l_{k,k+1}; edge k is
m_k = l_{k,k+1} - l_{k-1,k}, the edge of the object E_k, with edge 0 wrapping
from the last vertex.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .collection import Collection, right_dual_classes
from .surfaces import degree

Point = tuple


class PolygonError(ValueError):
    pass


def cross(u: Point, v: Point):
    return u[0] * v[1] - u[1] * v[0]


def sub(u: Point, v: Point) -> Point:
    return (u[0] - v[0], u[1] - v[1])


def add(u: Point, v: Point) -> Point:
    return (u[0] + v[0], u[1] + v[1])


@dataclass(frozen=True)
class HPPolygon:
    vertices: tuple[Point, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(p) for p in self.vertices))
        if len(set(self.vertices)) != len(self.vertices):
            raise PolygonError("degenerate polygon: repeated vertices")

    def __len__(self):
        return len(self.vertices)

    def edge(self, i: int) -> Point:
        n = len(self.vertices)
        return sub(self.vertices[i % n], self.vertices[(i - 1) % n])

    def edges(self) -> list[Point]:
        return [self.edge(i) for i in range(len(self.vertices))]

    def is_integral(self) -> bool:
        return all(Fraction(x).denominator == 1 for p in self.vertices for x in p)

    def ranks(self) -> list[int]:
        """r_i = lattice length of edge i; polygon must be integral."""
        if not self.is_integral():
            raise PolygonError("ranks are defined for integral polygons")
        return [gcd(int(m[0]), int(m[1])) for m in self.edges()]


def area_x2(p: HPPolygon):
    """Doubled (shoelace) area; positive for counter-clockwise polygons."""
    vs = p.vertices
    return sum(cross(vs[i - 1], vs[i]) for i in range(len(vs)))


def is_convex(p: HPPolygon) -> bool:
    """Counter-clockwise convexity with straight vertices allowed.

    All turns must be non-negative, zero turns must keep the direction, and
    the edge directions must wind around exactly once.
    """
    ms = p.edges()
    n = len(ms)
    if any(m == (0, 0) for m in ms):
        raise PolygonError("degenerate polygon: zero edge")
    for i in range(n):
        a, b = ms[i], ms[(i + 1) % n]
        t = cross(a, b)
        if t < 0:
            return False
        if t == 0 and (a[0] * b[0] + a[1] * b[1]) <= 0:
            return False  # reversal by pi
    return _winds_once(ms)


def _winds_once(ms) -> bool:
    """Exact check that the cyclic direction sequence makes one full turn.
    Assumes all consecutive turns already verified to be in [0, pi); then the
    winding number equals the number of lower-to-upper half plane crossings.
    """
    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    n = len(ms)
    up = sum(1 for i in range(n)
             if half(ms[i]) == 1 and half(ms[(i + 1) % n]) == 0)
    down = sum(1 for i in range(n)
               if half(ms[i]) == 0 and half(ms[(i + 1) % n]) == 1)
    return up == 1 and down == 1


def polygon_of(c: Collection) -> HPPolygon:
    """Gale-dual polygon of a full exceptional collection with positive ranks.

    Vertices are l_{i,i+1} = -[O_y] + sum_{j<=i} r_j [F_j|_Y] where F are the
    right dual classes and a class restricted to the anticanonical curve is
    the plane vector (rank, degree).
    """
    if not c.is_full:
        raise PolygonError("polygon is defined for full collections")
    if any(e.r <= 0 for e in c.objects):
        raise PolygonError("polygon needs positive ranks")
    s = c.surface
    duals = right_dual_classes(c)
    vecs = [(f.r, degree(f, s)) for f in duals]
    verts = []
    acc = (0, -1)
    for e, v in zip(c.objects, vecs):
        acc = (acc[0] + e.r * v[0], acc[1] + e.r * v[1])
        verts.append(acc)
    if verts[-1] != (0, -1):
        raise PolygonError("dual class cycle does not close")
    p = HPPolygon(tuple(verts))
    for i, e in enumerate(c.objects):
        if cross(p.vertices[i - 1], p.vertices[i]) != e.r * e.r:
            raise PolygonError("vertex pairing does not match ranks")
        m = p.edge(i)
        if m[0] % e.r or m[1] % e.r:
            raise PolygonError("edge not divisible by the rank")
        prim = (m[0] // e.r, m[1] // e.r)
        if gcd(abs(prim[0]), abs(prim[1])) != 1:
            raise PolygonError("edge is not rank times a primitive vector")
        if gcd(abs(p.vertices[i][0]), abs(p.vertices[i][1])) != 1:
            raise PolygonError("vertex is not primitive")
    if _lattice_index(p.vertices) != 1:
        raise PolygonError("vertices do not span the full lattice")
    return p


def _lattice_index(points) -> int:
    """Index in Z^2 of the sublattice spanned by integer points (the gcd of
    all 2x2 minors; 0 if the points do not span the plane)."""
    vs = [(int(p[0]), int(p[1])) for p in points]
    g = 0
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            g = gcd(g, abs(cross(vs[i], vs[j])))
            if g == 1:
                return 1
    return g


def very_strong_via_polygon(c: Collection) -> bool:
    return is_convex(polygon_of(c))


def unimodular_aligned(p1: HPPolygon, p2: HPPolygon) -> bool:
    """Same polygon up to one SL(2,Z) map, with matching vertex labels.

    The canonical polygon model is pinned by the K-theory of the
    anticanonical curve, but braid moves through the wrap (and line bundle
    twists) renormalize it by a unimodular map; label-aligned equivalence is
    the right comparison across such moves.
    """
    if len(p1) != len(p2):
        return False
    a, b = p1.vertices[-1], p1.vertices[0]
    c, d = p2.vertices[-1], p2.vertices[0]
    det = cross(a, b)
    if det == 0 or cross(c, d) != det:
        return False
    # M . [a b] = [c d]  =>  M = [c d] . [a b]^{-1}
    m00 = Fraction(c[0] * b[1] - d[0] * a[1], det)
    m01 = Fraction(-c[0] * b[0] + d[0] * a[0], det)
    m10 = Fraction(c[1] * b[1] - d[1] * a[1], det)
    m11 = Fraction(-c[1] * b[0] + d[1] * a[0], det)
    if any(f.denominator != 1 for f in (m00, m01, m10, m11)):
        return False
    if m00 * m11 - m01 * m10 != 1:
        return False
    return all((m00 * u[0] + m01 * u[1], m10 * u[0] + m11 * u[1]) == tuple(v)
               for u, v in zip(p1.vertices, p2.vertices))


def toric_system(c: Collection):
    """The rational divisor classes T_{i,i+1}, wrap term included (length n)."""
    if not c.is_full:
        raise PolygonError("toric systems are defined for full collections")
    if any(e.r <= 0 for e in c.objects):
        raise PolygonError("toric systems need positive ranks")
    s = c.surface
    objs = c.objects

    def sdiff(e, f):
        return tuple(Fraction(y, f.r) - Fraction(x, e.r)
                     for x, y in zip(e.c1, f.c1))

    ts = [sdiff(objs[i], objs[i + 1]) for i in range(len(objs) - 1)]
    from .surfaces import twist_canonical
    ts.append(sdiff(objs[-1], twist_canonical(objs[0], -1, s)))
    return ts


# ---------------------------------------------------------------------------
# long edges and quivers

def long_edges(p: HPPolygon):
    """Maximal runs of collinear consecutive edges, as lists of edge indices.

    The polygon must be convex; runs are collinear exactly at straight
    vertices (zero turn).
    """
    if not is_convex(p):
        raise PolygonError("long edges are defined for convex polygons")
    n = len(p)
    ms = p.edges()
    straight = [cross(ms[i], ms[(i + 1) % n]) == 0 for i in range(n)]
    # straight[i]: vertex between edge i and i+1 is straight
    if all(straight):
        raise PolygonError("degenerate polygon")
    start = next(i for i in range(n) if straight[i - 1] is False)
    runs = []
    run = [start]
    for k in range(1, n):
        i = (start + k) % n
        if straight[(i - 1) % n]:
            run.append(i)
        else:
            runs.append(run)
            run = [i]
    runs.append(run)
    return runs


def long_edge_subdivisions(p: HPPolygon):
    """Block sizes read off the polygon: edges per long edge, in cyclic order
    starting from the long edge containing edge 0 going forward."""
    runs = long_edges(p)
    return [len(r) for r in runs]


def has_parallel_long_edges(p: HPPolygon) -> bool:
    runs = long_edges(p)
    vecs = [p.edge(r[0]) for r in runs]
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            if cross(vecs[i], vecs[j]) == 0:
                return True
    return False


def quiver_matrix(p: HPPolygon):
    """Signed arrow multiplicities c_{ij} = omega(m_i, m_j)/(r_i r_j), i < j.

    Requires an integral convex polygon.  Returns the full antisymmetric
    integer matrix.
    """
    ranks = p.ranks()
    ms = p.edges()
    n = len(ms)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            num = cross(ms[i], ms[j])
            den = ranks[i] * ranks[j]
            if num % den:
                raise PolygonError("non-integral arrow count: broken invariants")
            rows[i][j] = num // den
    return tuple(tuple(r) for r in rows)


# ---------------------------------------------------------------------------
# shears and braid mutations of polygons

def shear(u: Point, v: Point, x: Point) -> Point:
    """The unique area-preserving affine map A_{uv} with A(u) = v fixing the
    line through the origin parallel to [u, v], applied to x."""
    w = sub(v, u)
    den = cross(u, w)
    if den == 0:
        raise PolygonError("shear undefined: omega(u, v) = 0")
    t = Fraction(cross(x, w), den)
    return (x[0] + t * w[0], x[1] + t * w[1])


def _norm_point(pt: Point) -> Point:
    out = []
    for x in pt:
        f = Fraction(x)
        out.append(int(f) if f.denominator == 1 else f)
    return tuple(out)


def polygon_braid_left(p: HPPolygon, b: int) -> HPPolygon:
    """tilde sigma_b on the polygon: vertex w_{b-1} becomes
    A_{w_{b-1}, w_b}(w_{b-2})."""
    n = len(p)
    if not 1 <= b <= n:
        raise PolygonError(f"braid index {b} out of range 1..{n}")
    i = b - 1
    vs = list(p.vertices)
    new = shear(vs[i], vs[(i + 1) % n], vs[(i - 1) % n])
    vs[i] = _norm_point(new)
    return HPPolygon(tuple(vs))


def polygon_braid_right(p: HPPolygon, b: int) -> HPPolygon:
    """tilde sigma_b^{-1} on the polygon: vertex w_{b-1} becomes
    A_{w_{b-1}, w_{b-2}}(w_b)."""
    n = len(p)
    if not 1 <= b <= n:
        raise PolygonError(f"braid index {b} out of range 1..{n}")
    i = b - 1
    vs = list(p.vertices)
    new = shear(vs[i], vs[(i - 1) % n], vs[(i + 1) % n])
    vs[i] = _norm_point(new)
    return HPPolygon(tuple(vs))


# ---------------------------------------------------------------------------
# opposing vertices, admissibility, forbidden region

def opposing_vertices(p: HPPolygon, i: int) -> list[int]:
    """Vertex indices maximizing omega(m_i, x - l_{i,i+1}) (the line H_i)."""
    if not is_convex(p):
        raise PolygonError("opposing vertices are defined for convex polygons")
    m = p.edge(i)
    w = p.vertices[i % len(p)]
    vals = [cross(m, sub(x, w)) for x in p.vertices]
    top = max(vals)
    return [j for j, v in enumerate(vals) if v == top]

def earliest_opposing(p: HPPolygon, i: int) -> int:
    """First opposing vertex for m_i after the edge in cyclic order."""
    opp = set(opposing_vertices(p, i))
    n = len(p)
    for k in range(1, n):
        j = (i + k) % n
        if j in opp:
            return j
    raise PolygonError("no opposing vertex found")


def latest_opposing_before(p: HPPolygon, i: int) -> int:
    """Last opposing vertex for m_i before the edge in cyclic order (the
    mirror notion, used by left mutations)."""
    opp = set(opposing_vertices(p, i))
    n = len(p)
    for k in range(2, n + 1):
        j = (i - k) % n
        if j in opp:
            return j
    raise PolygonError("no opposing vertex found")


def admissible_vertices(p: HPPolygon) -> set[int]:
    out = set()
    for i in range(len(p)):
        out |= set(opposing_vertices(p, i))
    return out


def forbidden_region(p: HPPolygon):
    """Half-plane constraints (a, b, c) meaning a x + b y <= c, one per long
    edge: the half plane bounded by the line parallel to m_i half way between
    the edge line and H_i, on the edge side."""
    if not is_convex(p):
        raise PolygonError("forbidden region is defined for convex polygons")
    out = []
    for run in long_edges(p):
        i = run[0]
        m = p.edge(i)
        w = p.vertices[i % len(p)]
        far = max(cross(m, sub(x, w)) for x in p.vertices)
        # omega(m, x - w) <= far/2  <=>  -m_y x + m_x y <= far/2 + omega(m, w)
        out.append((-m[1], m[0], Fraction(far, 2) + cross(m, w)))
    return out


def origin_in_forbidden(p: HPPolygon) -> bool:
    return all(c >= 0 for (_, _, c) in forbidden_region(p))


def area_delta_sign(p: HPPolygon, i: int) -> int:
    """Sign of the area change of the right quiver mutation at edge i:
    sign of omega(m_i, l_{j,j+1} + l_{i,i+1}), j an opposing vertex."""
    m = p.edge(i)
    j = earliest_opposing(p, i)
    v = add(p.vertices[j], p.vertices[i % len(p)])
    t = cross(m, v)
    return (t > 0) - (t < 0)


# ---------------------------------------------------------------------------
# quiver mutations at polygon level (single shear to the opposing vertex)

def polygon_quiver_mutate_right(p: HPPolygon, i: int) -> HPPolygon:
    """Shear of Prop.-style right quiver mutation at edge i: vertices
    w_i..w_{j-1} are replaced by A(w_{i+1})..A(w_j), A = A_{w_i, w_{i-1}},
    j the earliest opposing vertex."""
    n = len(p)
    j = earliest_opposing(p, i)
    u, v = p.vertices[i % n], p.vertices[(i - 1) % n]
    vs = list(p.vertices)
    k = i % n
    while k != j:
        vs[k] = _norm_point(shear(u, v, p.vertices[(k + 1) % n]))
        k = (k + 1) % n
    return HPPolygon(tuple(vs))


def polygon_quiver_mutate_left(p: HPPolygon, b: int) -> HPPolygon:
    """Left quiver mutation whose first braid move is tilde sigma_b: the
    mirrored shear, replacing w_{j'+1}..w_{b-1} by A(w_{j'})..A(w_{b-2}),
    A = A_{w_{b-1}, w_b}, j' the latest opposing vertex before edge m_b."""
    n = len(p)
    i = b % n  # edge of the mutated object
    jp = latest_opposing_before(p, i)
    u, v = p.vertices[(i - 1) % n], p.vertices[i % n]
    vs = list(p.vertices)
    k = (i - 1) % n
    while k != jp:
        vs[k] = _norm_point(shear(u, v, p.vertices[(k - 1) % n]))
        k = (k - 1) % n
    return HPPolygon(tuple(vs))

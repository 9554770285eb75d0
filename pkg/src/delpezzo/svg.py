"""Deterministic SVG rendering of HP polygons: lattice subdivision points,
the origin, optionally the forbidden region and the quiver arrows.
"""
from __future__ import annotations

from fractions import Fraction

from .polygon import HPPolygon, forbidden_region, is_convex

SCALE = 32
PAD = 24


def _fmt(x) -> str:
    return f"{float(x):.3f}"


def render_svg(p: HPPolygon, show_forbidden: bool = False,
               quiver: bool = False) -> str:
    xs = [float(v[0]) for v in p.vertices] + [0.0]
    ys = [float(v[1]) for v in p.vertices] + [0.0]
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    w = (maxx - minx) * SCALE + 2 * PAD
    h = (maxy - miny) * SCALE + 2 * PAD

    def tx(pt):
        return ((float(pt[0]) - minx) * SCALE + PAD,
                (maxy - float(pt[1])) * SCALE + PAD)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(w)}" '
           f'height="{_fmt(h)}" viewBox="0 0 {_fmt(w)} {_fmt(h)}">']

    if show_forbidden and is_convex(p):
        region = _forbidden_polygon(p)
        if region:
            pts = " ".join(f"{_fmt(tx(q)[0])},{_fmt(tx(q)[1])}" for q in region)
            out.append(f'<polygon class="forbidden" points="{pts}" '
                       'fill="#8fd19e" fill-opacity="0.5" stroke="none"/>')

    pts = " ".join(f"{_fmt(tx(v)[0])},{_fmt(tx(v)[1])}" for v in p.vertices)
    out.append(f'<polygon class="hull" points="{pts}" fill="none" '
               'stroke="#1f4e9c" stroke-width="2"/>')

    for v in p.vertices:
        x, y = tx(v)
        out.append(f'<circle class="vertex" cx="{_fmt(x)}" cy="{_fmt(y)}" r="3.5" '
                   'fill="#1f4e9c"/>')
    ox, oy = tx((0, 0))
    out.append(f'<circle class="origin" cx="{_fmt(ox)}" cy="{_fmt(oy)}" r="4" '
               'fill="#d03030"/>')

    if quiver:
        mids = []
        n = len(p)
        for i in range(n):
            a, b = p.vertices[(i - 1) % n], p.vertices[i]
            mids.append(((float(a[0]) + float(b[0])) / 2,
                         (float(a[1]) + float(b[1])) / 2))
        from .polygon import quiver_matrix
        try:
            qm = quiver_matrix(p)
        except Exception:
            qm = None
        if qm is not None:
            for i in range(n):
                for j in range(i + 1, n):
                    c = qm[i][j]
                    if c == 0:
                        continue
                    srcm, dstm = (mids[i], mids[j]) if c > 0 else (mids[j], mids[i])
                    x1, y1 = tx(srcm)
                    x2, y2 = tx(dstm)
                    out.append(
                        f'<line class="arrow" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
                        f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" stroke="#777" '
                        f'stroke-width="1"/>')
                    out.append(
                        f'<text class="mult" x="{_fmt((x1 + x2) / 2)}" '
                        f'y="{_fmt((y1 + y2) / 2)}" font-size="10" '
                        f'fill="#444">{abs(c)}</text>')

    out.append("</svg>")
    return "\n".join(out)


def _forbidden_polygon(p: HPPolygon):
    """Vertices of the forbidden region (intersection of half planes),
    clipped exactly with rational arithmetic."""
    # start from a big box around the polygon
    xs = [Fraction(v[0]) for v in p.vertices]
    ys = [Fraction(v[1]) for v in p.vertices]
    lo_x, hi_x = min(xs) - 1, max(xs) + 1
    lo_y, hi_y = min(ys) - 1, max(ys) + 1
    region = [(lo_x, lo_y), (hi_x, lo_y), (hi_x, hi_y), (lo_x, hi_y)]
    for (a, b, c) in forbidden_region(p):
        region = _clip(region, a, b, c)
        if not region:
            return []
    return region


def _clip(poly, a, b, c):
    out = []
    n = len(poly)
    for i in range(n):
        p1, p2 = poly[i], poly[(i + 1) % n]
        v1 = a * p1[0] + b * p1[1] - c
        v2 = a * p2[0] + b * p2[1] - c
        if v1 <= 0:
            out.append(p1)
        if (v1 < 0 < v2) or (v2 < 0 < v1):
            t = Fraction(v1, v1 - v2)
            out.append((p1[0] + t * (p2[0] - p1[0]), p1[1] + t * (p2[1] - p1[1])))
    return out

"""Picard lattices of the eleven del Pezzo surfaces and numerical K-theory classes.

Everything is exact: divisor classes are dense integer tuples in the standard
basis (H, E_1..E_n) for blow-ups of the plane, (F_1, F_2) for the quadric.
Slopes are Fractions, with math.inf as the slope of torsion classes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Vec = tuple[int, ...]


@dataclass(frozen=True)
class Surface:
    kind: str
    intersection_matrix: tuple[Vec, ...]
    canonical: Vec                       # class of K_X
    simple_roots: tuple[Vec, ...]
    # simple reflection remap used by certificate words (0-based nodes as in
    # the SageMath labelling of the root system); sage_nodes[w] is an index
    # into simple_roots
    sage_nodes: tuple[int, ...]

    @property
    def picard_rank(self) -> int:
        return len(self.canonical)

    @property
    def rank_k0(self) -> int:
        """length of a full exceptional collection"""
        return self.picard_rank + 2

    @property
    def k2(self) -> int:
        return self.intersect(self.canonical, self.canonical)

    def intersect(self, u: Vec, v: Vec) -> int:
        m = self.intersection_matrix
        return sum(u[i] * m[i][j] * v[j] for i in range(len(u)) for j in range(len(v)))

    def check_vector(self, v) -> Vec:
        v = tuple(int(x) for x in v)
        if len(v) != self.picard_rank:
            raise ValueError(
                f"divisor vector of length {len(v)} on {self.kind} "
                f"(expected {self.picard_rank})")
        return v


def _xn(n: int) -> Surface:
    rho = n + 1
    inter = tuple(tuple((1 if i == 0 else -1) if i == j else 0 for j in range(rho))
                  for i in range(rho))
    canonical = (-3,) + (1,) * n
    roots: list[Vec] = []
    if n == 2:
        roots = [(0, 1, -1)]
    elif n >= 3:
        roots.append((1, -1, -1, -1) + (0,) * (n - 3))
        for i in range(2, n + 1):
            v = [0] * rho
            v[i - 1], v[i] = 1, -1
            roots.append(tuple(v))
    # SageMath node labelling of the simple reflections (0-based); identity
    # except for the documented swaps
    sage = list(range(len(roots)))
    if n == 4:
        sage[1], sage[3] = 3, 1
    elif n == 5:
        sage = [1, 2, 3, 0, 4]
    elif n >= 6:
        sage[0], sage[1] = 1, 0
    return Surface(f"X{n}", inter, canonical, tuple(roots), tuple(sage))


SURFACES: dict[str, Surface] = {
    "P2": Surface("P2", ((1,),), (-3,), (), ()),
    "P1xP1": Surface("P1xP1", ((0, 1), (1, 0)), (-2, -2), ((1, -1),), (0,)),
}
for _n in range(1, 9):
    SURFACES[f"X{_n}"] = _xn(_n)


def surface(kind: str) -> Surface:
    try:
        return SURFACES[kind]
    except KeyError:
        raise ValueError(f"unknown surface {kind!r}") from None


@dataclass(frozen=True)
class NumClass:
    """A numerical K-theory class (rank, first Chern class, Euler characteristic)."""
    r: int
    c1: Vec
    chi: int

    def __neg__(self) -> "NumClass":
        return NumClass(-self.r, tuple(-x for x in self.c1), -self.chi)

    def sub_multiple(self, k: int, other: "NumClass") -> "NumClass":
        """self - k*other"""
        return NumClass(self.r - k * other.r,
                        tuple(a - k * b for a, b in zip(self.c1, other.c1)),
                        self.chi - k * other.chi)


def euler_form(e: NumClass, f: NumClass, s: Surface) -> int:
    """chi(e,f), the Euler pairing obtained from Riemann-Roch."""
    if len(e.c1) != s.picard_rank or len(f.c1) != s.picard_rank:
        raise ValueError("c1 dimension does not match the surface basis")
    return (e.r * f.chi + f.r * e.chi - e.r * f.r
            - s.intersect(e.c1, f.c1) + f.r * s.intersect(s.canonical, e.c1))


def make_exceptional(r: int, c1, s: Surface) -> NumClass:
    """The unique numerically exceptional class with the given rank and c1.

    Solves euler_form(e,e) = 1 for chi; a non-integral solution means no
    exceptional class has this numerical datum.
    """
    if r <= 0:
        raise ValueError("rank must be positive")
    c1 = s.check_vector(c1)
    num = 1 + r * r + s.intersect(c1, c1) - r * s.intersect(s.canonical, c1)
    if num % (2 * r) != 0:
        raise ValueError(f"no exceptional class with r={r}, c1={c1} on {s.kind}")
    return NumClass(r, c1, num // (2 * r))


def degree(e: NumClass, s: Surface) -> int:
    """d(e) = c1(e).(-K_X)"""
    return -s.intersect(e.c1, s.canonical)


def slope(e: NumClass, s: Surface):
    """d/r as an exact Fraction; +inf for torsion (r = 0) classes."""
    if e.r == 0:
        return math.inf
    return Fraction(degree(e, s), e.r)


def twist(e: NumClass, a: int, ell, s: Surface) -> NumClass:
    """e tensored by the line bundle O(a*K_X + ell).

    Riemann-Roch on a surface: chi(e (x) L) = chi(e) + c1(e).L + r(L.L - L.K)/2.
    """
    L = tuple(a * k + x for k, x in zip(s.canonical, s.check_vector(ell)))
    ll = s.intersect(L, L)
    lk = s.intersect(L, s.canonical)
    twice = 2 * e.chi + 2 * s.intersect(e.c1, L) + e.r * (ll - lk)
    assert twice % 2 == 0
    return NumClass(e.r, tuple(x + e.r * k for x, k in zip(e.c1, L)), twice // 2)


def twist_canonical(e: NumClass, a: int, s: Surface) -> NumClass:
    """e (x) omega_X^a"""
    return twist(e, a, (0,) * s.picard_rank, s)


def reflect(rho, d, s: Surface) -> Vec:
    """Root reflection s_rho(D) = D + (D.rho) rho for a root rho (rho^2 = -2)."""
    rho = s.check_vector(rho)
    d = s.check_vector(d)
    if s.intersect(rho, rho) != -2:
        raise ValueError(f"{rho} is not a root on {s.kind}")
    t = s.intersect(d, rho)
    return tuple(x + t * y for x, y in zip(d, rho))


def weyl_apply(word, e: NumClass, s: Surface) -> NumClass:
    """Apply a composition of simple reflections (our 0-based root indices,
    left to right) to a class.  Rank and chi are untouched; only c1 moves.
    """
    c1 = e.c1
    for i in word:
        if not 0 <= i < len(s.simple_roots):
            raise ValueError(f"reflection index {i} out of range on {s.kind}")
        c1 = reflect(s.simple_roots[i], c1, s)
    return NumClass(e.r, c1, e.chi)


def sage_word_to_roots(word, s: Surface, offset: int = 0) -> list[int]:
    """Translate a certificate word (SageMath node labels) into our root indices.

    offset 0 reads entries as 0-based Sage nodes; offset 1 shifts entries by
    one first.  Which offset is correct is decided empirically by requiring
    all shipped certificates to verify (see verify.resolve_certificate_offset).
    """
    out = []
    for w in word:
        w = w + offset
        if not 0 <= w < len(s.sage_nodes):
            raise ValueError(f"certificate reflection {w} out of range on {s.kind}")
        out.append(s.sage_nodes[w])
    return out

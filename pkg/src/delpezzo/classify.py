"""Bounded enumeration of the numerical data of minimal block-complete very
strong collections, per surface and block count (3 or 4), together with the
polygon reconstruction and lattice filters that certify each candidate.

Candidate data is the cyclic tuple (alphas, ranks, adjacent chis including
the wrap term); the reduced Gram matrix follows by additivity.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .linalg import (count_short_vectors, det_int, kernel_basis_int, mat,
                     mat_sub, identity, quotient_by_radical,
                     serre_admissible, serre_matrix)
from .polygon import (HPPolygon, PolygonError, cross, has_parallel_long_edges,
                      is_convex, origin_in_forbidden)
from .surfaces import Surface, surface


# ---------------------------------------------------------------------------
# bounded reciprocal equations (sum of a_i / k_i = total)

def bounded_reciprocal_solve(targets, total):
    """All tuples of positive integers (k_1..k_m) with sum a_i/k_i = total.

    Finiteness comes from the recursive maximum argument: each prefix value
    is bounded below by total minus the largest achievable remainder.
    """
    targets = [Fraction(t) for t in targets]
    total = Fraction(total)
    if total <= 0:
        return []

    def max_below(ts, bound):
        """largest achievable sum < bound, or None"""
        if bound <= 0:
            return None
        if len(ts) == 1:
            k = ts[0] / bound
            kk = int(k) + 1 if k == int(k) else math.ceil(k)
            return ts[0] / kk
        m = max_below(ts[1:], bound)
        best = None
        # branch 1: first term small enough that the rest can stay maximal
        if m is not None:
            k = ts[0] / (bound - m)
            kk = int(k) + 1 if k == int(k) else math.ceil(k)
            cand = ts[0] / kk + m
            best = cand
        # branch 2: first term >= bound - m (finitely many k)
        lo = 1
        hi = None
        if m is not None:
            hi = ts[0] / (bound - m)
        k = lo
        while hi is None or k <= hi:
            s1 = ts[0] / k
            if s1 < bound:
                rest = max_below(ts[1:], bound - s1)
                if rest is not None:
                    cand = s1 + rest
                    if best is None or cand > best:
                        best = cand
                if hi is None:
                    break  # single-branch guard; cannot happen with m set
            k += 1
        return best

    out = []

    def rec(ts, budget, acc):
        if len(ts) == 1:
            if budget <= 0:
                return
            k = ts[0] / budget
            if k.denominator == 1:
                out.append(tuple(acc + [int(k)]))
            return
        m = max_below(ts[1:], budget)
        if m is None:
            return
        kmin_f = ts[0] / budget
        kmin = int(kmin_f) + 1 if kmin_f == int(kmin_f) else math.ceil(kmin_f)
        kmax = int(ts[0] / (budget - m))
        for k in range(max(1, kmin), kmax + 1):
            rec(ts[1:], budget - ts[0] / k, acc + [k])

    rec(targets, total, [])
    return out


# ---------------------------------------------------------------------------
# polygon reconstruction from block data

def reconstruct_polygon(alphas, ranks, chis):
    """Rational-model polygon with the prescribed invariants, or None.

    chis are the adjacent pairings including the wrap term (length k).  Long
    edge vectors are built from S_{i,i+1} and the closure relation; the
    origin is solved from two R_i constraints and the rest are verified.
    Only k = 3 and k = 4 are supported.
    """
    k = len(alphas)
    if not (len(ranks) == len(chis) == k):
        raise ValueError("alphas, ranks, chis must have equal length")
    if k not in (3, 4):
        raise NotImplementedError("reconstruction implemented for 3 or 4 blocks")
    if any(x <= 0 for x in alphas + ranks) or any(x <= 0 for x in chis):
        return None
    S = [chis[i] * alphas[i] * alphas[(i + 1) % k] * ranks[i] * ranks[(i + 1) % k]
         for i in range(k)]
    R = [alphas[i] * ranks[i] ** 2 for i in range(k)]
    if k == 3:
        if not (S[0] == S[1] == S[2]):
            return None
        M = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(S[0]))]
        M.append((-M[0][0] - M[1][0], -M[0][1] - M[1][1]))
    else:
        if S[3] != S[0] - S[1] + S[2]:
            return None
        if S[0] == 0:
            return None
        M = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(S[0]))]
        y2 = Fraction(S[2] - S[1])
        x2 = Fraction(-S[1], S[0])
        M.append((x2, y2))
        M.append((-sum(m[0] for m in M), -sum(m[1] for m in M)))
        if cross(M[2], M[3]) != S[2] or cross(M[3], M[0]) != S[3]:
            return None
    # block vertices B_i = p + M_0 + ... + M_i, with B_{k-1} = p; solve p from
    # R_0 = cross(p, M_0) and R_1 = cross(p, M_1) + cross(M_0, M_1)
    det = cross(M[0], M[1])
    if det == 0:
        return None
    c0, c1 = Fraction(R[0]), Fraction(R[1]) - cross(M[0], M[1])
    # cross(p, M_i) = p.x M_i.y - p.y M_i.x
    px = Fraction(c0 * M[1][0] - c1 * M[0][0], -det)
    py = Fraction(c0 * M[1][1] - c1 * M[0][1], -det)
    p = (px, py)
    acc = p
    bverts = []
    for i in range(k):
        acc = (acc[0] + M[i][0], acc[1] + M[i][1])
        bverts.append(acc)
    if bverts[-1] != p:
        return None
    for i in range(k):
        if cross(bverts[i - 1], bverts[i]) != R[i]:
            return None
    # subdivide each long edge into alpha_i equal object edges
    verts = []
    cur = p
    for i in range(k):
        stepx, stepy = Fraction(M[i][0], alphas[i]), Fraction(M[i][1], alphas[i])
        for _ in range(alphas[i]):
            cur = (cur[0] + stepx, cur[1] + stepy)
            verts.append(cur)
    try:
        poly = HPPolygon(tuple(verts))
    except PolygonError:
        return None
    return poly


# ---------------------------------------------------------------------------
# full Gram from block data, and the lattice realizability filter

def reduced_gram_from_data(ranks, chis):
    """k x k reduced Gram via the additivity relation."""
    k = len(ranks)
    m = [[0] * k for _ in range(k)]
    for i in range(k):
        m[i][i] = 1
        for j in range(i + 1, k):
            v = Fraction(ranks[i] * ranks[j]) * sum(
                Fraction(chis[u], ranks[u] * ranks[u + 1]) for u in range(i, j))
            if v.denominator != 1:
                return None
            m[i][j] = int(v)
    return mat(m)


def full_gram_from_data(alphas, ranks, chis):
    red = reduced_gram_from_data(ranks, chis)
    if red is None:
        return None
    k = len(alphas)
    n = sum(alphas)
    blk = []
    for i, a in enumerate(alphas):
        blk += [i] * a
    m = [[0] * n for _ in range(n)]
    for u in range(n):
        m[u][u] = 1
        for v in range(u + 1, n):
            if blk[u] != blk[v]:
                m[u][v] = red[blk[u]][blk[v]]
    return mat(m)


def surface_orthogonal_lattice(s: Surface):
    """Gram of K^perp in Pic(X) with the negated (positive definite)
    intersection form."""
    rows = [tuple(s.intersect(s.canonical,
                              tuple(int(i == j) for j in range(s.picard_rank)))
                  for i in range(s.picard_rank))]
    basis = kernel_basis_int(rows)
    return mat([[-s.intersect(u, v) for v in basis] for u in basis])


SHORT_VECTOR_CUTOFF = 4


def lattice_invariants(gram, max_norm: int = SHORT_VECTOR_CUTOFF):
    """(rank, |disc|, short vector counts) of a positive definite form."""
    if not gram:
        return (0, 1, ())
    counts = count_short_vectors(gram, max_norm)
    return (len(gram), abs(det_int(gram)),
            tuple(sorted(counts.items())))


@functools.lru_cache(maxsize=None)
def _surface_lattice_invariants(kind: str):
    return lattice_invariants(surface_orthogonal_lattice(surface(kind)))


def gram_realizable_on(gram, s: Surface) -> bool:
    """Necessary lattice conditions for the Gram matrix of a hypothetical
    collection to be realized in the numerical K-theory of the surface.

    The Serre matrix must be unipotent with rank(s-1) <= 2, and the quotient
    of ker(s-1) by the radical of the Euler pairing must have the lattice
    invariants of K^perp in Pic(X).
    """
    n = len(gram)
    if n != s.rank_k0:
        return False
    if not serre_admissible(gram):
        return False
    sm = serre_matrix(gram)
    ker = kernel_basis_int(mat_sub(sm, identity(n)))
    if len(ker) != n - 2:
        return False
    chi = lambda u, v: sum(u[i] * gram[i][j] * v[j]
                           for i in range(n) for j in range(n))
    kg = [[chi(u, v) for v in ker] for u in ker]
    if any(kg[i][j] != kg[j][i] for i in range(len(ker)) for j in range(len(ker))):
        return False
    quot = quotient_by_radical(mat(kg))
    if len(quot) != s.picard_rank - 1:
        return False
    # chi restricted to ker(s-1) is minus the intersection form on K^perp
    # (positive definite); compare with the reference lattice of the surface
    ref = _surface_lattice_invariants(s.kind)
    if quot and abs(det_int(quot)) != ref[1]:
        return False
    try:
        inv = lattice_invariants(quot)
    except ValueError:
        return False
    return inv == ref


# ---------------------------------------------------------------------------
# the enumerator

@dataclass(frozen=True)
class Candidate:
    surface: str
    alphas: tuple[int, ...]
    ranks: tuple[int, ...]
    chis: tuple[int, ...]       # adjacent pairings including the wrap term
    reduced_gram: tuple

    def canonical_key(self):
        k = len(self.alphas)
        cycles = []
        for r in range(k):
            cyc = tuple((self.alphas[(i + r) % k], self.ranks[(i + r) % k],
                         self.chis[(i + r) % k]) for i in range(k))
            cycles.append(cyc)
        return min(cycles)


def _compositions(total, parts):
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _passes_filters(kind, alphas, ranks, chis) -> bool:
    s = surface(kind)
    g = 0
    for r in ranks:
        g = gcd(g, r)
    if g != 1:
        return False
    if any(c <= 0 for c in chis):
        return False
    # work horse identity
    k = len(alphas)
    if sum(Fraction(chis[i], ranks[i] * ranks[(i + 1) % k]) for i in range(k)) != s.k2:
        return False
    full = full_gram_from_data(alphas, ranks, chis)
    if full is None:
        return False
    if not gram_realizable_on(full, s):
        return False
    poly = reconstruct_polygon(list(alphas), list(ranks), list(chis))
    if poly is None:
        return False
    if not is_convex(poly):
        return False
    if has_parallel_long_edges(poly):
        return False
    if not origin_in_forbidden(poly):
        return False
    return True


def _candidate(kind, alphas, ranks, chis):
    return Candidate(kind, tuple(alphas), tuple(ranks), tuple(chis),
                     reduced_gram_from_data(list(ranks), list(chis)))


def _three_block_rank_cap(k2: int) -> int:
    """Upper bound for alpha_i r_i^2 over ground (minimal) solutions of the
    three block Markov-type equation; derived from u_min <= 12/K^2,
    |u_1 - u_2| <= u_min and the quadratic relation between them."""
    best = 0
    for u0 in range(1, 12 // k2 + 1):
        if k2 * u0 <= 4:
            continue
        delta = Fraction(u0, 2)
        disc = 16 * u0 ** 2 + 4 * (k2 * u0 - 4) * (u0 ** 2 + k2 * u0 * delta ** 2)
        amax = (4 * u0 + math.isqrt(math.ceil(disc))) / (2 * (k2 * u0 - 4)) + 1
        best = max(best, math.ceil(amax + delta))
    return max(best, 4)


def enumerate_minimal(kind: str, k: int):
    """All candidate (alphas, ranks, chis) data of minimal block-complete
    very strong collections with k blocks, deduplicated up to rotation and
    sorted by canonical key."""
    s = surface(kind)
    if k not in (3, 4):
        raise ValueError("enumeration implemented for 3 or 4 blocks")
    total = 12 - s.k2
    if total < k:
        return []
    found = {}
    for alphas in _compositions(total, k):
        hits = _enumerate_three(s, alphas) if k == 3 else _enumerate_four(s, alphas)
        for ranks, chis in hits:
            if _passes_filters(kind, alphas, ranks, chis):
                cand = _candidate(kind, alphas, ranks, chis)
                found[cand.canonical_key()] = cand
    return [found[key] for key in sorted(found)]


def _enumerate_three(s: Surface, alphas):
    k2 = s.k2
    d = k2 * alphas[0] * alphas[1] * alphas[2]
    m = isqrt(d)
    if m * m != d:
        return
    cap = _three_block_rank_cap(k2)
    bounds = [isqrt(cap // a) for a in alphas]
    for r0 in range(1, bounds[0] + 1):
        for r1 in range(1, bounds[1] + 1):
            for r2 in range(1, bounds[2] + 1):
                t = alphas[0] * r0 ** 2 + alphas[1] * r1 ** 2 + alphas[2] * r2 ** 2
                if t != m * r0 * r1 * r2:
                    continue
                ranks = (r0, r1, r2)
                chis = []
                ok = True
                for i in range(3):
                    num = m * ranks[(i + 2) % 3]
                    den = alphas[i] * alphas[(i + 1) % 3]
                    if num % den:
                        ok = False
                        break
                    chis.append(num // den)
                if ok:
                    yield ranks, tuple(chis)


def _enumerate_four(s: Surface, alphas):
    k2 = s.k2
    a0, a1, a2, a3 = alphas
    seen = set()

    def emit(ranks, chis):
        key = (ranks, chis)
        if key not in seen:
            seen.add(key)
            yield ranks, chis

    # Case 1: the origin on the diagonal; both extremal bounds are equalities
    if isqrt(a1 * a2) ** 2 == a1 * a2 and isqrt(a0 * a3) ** 2 == a0 * a3 \
            and 2 % isqrt(a1 * a2) == 0 and 2 % isqrt(a0 * a3) == 0:
        chi12 = 2 // isqrt(a1 * a2)
        chi30 = 2 // isqrt(a0 * a3)
        for u, v in bounded_reciprocal_solve([1, 1], Fraction(k2, 4)):
            # u = alpha_0 r_0^2 = alpha_3 r_3^2, v = alpha_1 r_1^2 = alpha_2 r_2^2
            rs = []
            for a, val in ((a0, u), (a1, v), (a2, v), (a3, u)):
                if val % a:
                    rs = None
                    break
                r = isqrt(val // a)
                if r * r * a != val:
                    rs = None
                    break
                rs.append(r)
            if rs is None:
                continue
            r0, r1, r2, r3 = rs
            for chis in _solve_remaining(k2, rs, chi12, chi30):
                yield from emit(tuple(rs), chis)

    # Case 2: chi12 = 1, bounded chi30
    if a1 * a2 <= 3:
        chi12 = 1
        for chi30 in range(1, 5):
            t = chi30 * chi30 * a3 * a0
            if t < 5 or t * a1 * a2 > 16:
                continue
            gamma = Fraction(1) / (Fraction(1, 2) - Fraction(2, t))
            for r0 in range(1, isqrt(11 * chi30 ** 2 * a3) + 1):
                for r3 in range(1, isqrt(11 * chi30 ** 2 * a0) + 1):
                    if r0 * r3 > 22 * chi30:
                        continue
                    if 2 * r0 > chi30 * a3 * r3 or 2 * r3 > chi30 * a0 * r0:
                        continue
                    cap = a0 * r0 ** 2 + a3 * r3 ** 2
                    for r1 in range(1, isqrt(cap // a1) + 1):
                        for r2 in range(1, isqrt((cap - a1 * r1 ** 2) // a2) + 1):
                            rs = [r0, r1, r2, r3]
                            for chis in _solve_remaining(k2, rs, chi12, chi30):
                                chi01, _, chi23, _ = chis
                                if 2 * r1 > chi01 * a0 * r0:
                                    continue
                                if 2 * r2 > chi23 * a3 * r3:
                                    continue
                                if not 2 <= Fraction(chi01 * a0 * r0, r1) <= gamma:
                                    continue
                                if not 2 <= Fraction(chi23 * a3 * r3, r2) <= gamma:
                                    continue
                                yield from emit(tuple(rs), chis)


def _solve_remaining(k2, rs, chi12, chi30):
    """Positive integer solutions (chi01, chi12, chi23, chi30) of the work
    horse identity given the middle and wrap terms."""
    r0, r1, r2, r3 = rs
    rem = k2 - Fraction(chi12, r1 * r2) - Fraction(chi30, r3 * r0)
    if rem <= 0:
        return
    top = int(rem * r0 * r1)
    for chi01 in range(1, top + 1):
        rest = rem - Fraction(chi01, r0 * r1)
        if rest <= 0:
            break
        chi23 = rest * r2 * r3
        if chi23.denominator == 1:
            yield (chi01, chi12, int(chi23), chi30)

"""Small exact linear algebra over the rationals and integer lattices.

Matrices are tuples of tuples.  Nothing here is performance-critical:
dimensions are at most 11.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

Matrix = tuple[tuple, ...]


def mat(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_inv(m: Matrix) -> Matrix:
    """Inverse over Q by Gauss-Jordan; raises ZeroDivisionError if singular."""
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def rank(m: Matrix) -> int:
    rows = [[Fraction(x) for x in row] for row in m]
    rk, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rk < len(rows) and col < ncols:
        piv = next((r for r in range(rk, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        for r in range(len(rows)):
            if r != rk and rows[r][col]:
                f = rows[r][col] / rows[rk][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rk])]
        rk += 1
        col += 1
    return rk


def mat_pow(m: Matrix, k: int) -> Matrix:
    out = identity(len(m))
    for _ in range(k):
        out = matmul(out, m)
    return out


def is_unipotent(m: Matrix) -> bool:
    n = len(m)
    return all(x == 0 for row in mat_pow(mat_sub(m, identity(n)), n) for x in row)


def serre_matrix(gram: Matrix) -> Matrix:
    """s = M^(-1) M^T, the numerical shadow of the Serre functor."""
    return matmul(mat_inv(gram), transpose(gram))


def serre_admissible(gram: Matrix) -> bool:
    """Unipotency and rank(s - 1) <= 2, necessary for a Gram matrix of an
    exceptional collection on a surface."""
    try:
        s = serre_matrix(gram)
    except ZeroDivisionError:
        return False
    return is_unipotent(s) and rank(mat_sub(s, identity(len(s)))) <= 2


def kernel_basis_int(m: Matrix) -> list[tuple[int, ...]]:
    """Basis of the integer kernel lattice {x : m x = 0} (saturated)."""
    n = len(m[0])
    rows = [[Fraction(x) for x in row] for row in m]
    # reduced row echelon
    pivots = []
    rk, col = 0, 0
    while rk < len(rows) and col < n:
        piv = next((r for r in range(rk, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        rows[rk] = [x / rows[rk][col] for x in rows[rk]]
        for r in range(len(rows)):
            if r != rk and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rk])]
        pivots.append(col)
        rk += 1
        col += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        den = 1
        for x in v:
            den = den * x.denominator // gcd(den, x.denominator)
        basis.append([int(x * den) for x in v])
    if not basis:
        return []
    # saturate: the integer kernel is (rational kernel) cap Z^n
    _, d, v = snf_transform(basis)
    vinv = mat_inv(mat(v))
    q = sum(1 for i in range(min(len(d), len(d[0]))) if d[i][i] != 0)
    rows_full = [[int(x) for x in row] for row in vinv]
    return [tuple(r) for r in rows_full[:q]]


def gram_of(vectors, pairing) -> Matrix:
    return tuple(tuple(pairing(u, v) for v in vectors) for u in vectors)


def det_int(m: Matrix) -> int:
    """Determinant of an integer matrix (fraction-free enough for our sizes)."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] / a[col][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    assert det.denominator == 1
    return int(det)


def snf_transform(a) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form with transforms: returns (U, D, V) with U a V = D,
    U, V unimodular, D diagonal (as nested lists)."""
    a = [list(map(int, row)) for row in a]
    rows, cols = len(a), len(a[0])
    U = [[int(i == j) for j in range(rows)] for i in range(rows)]
    V = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(i, j, k):  # row i += k * row j
        a[i] = [x + k * y for x, y in zip(a[i], a[j])]
        U[i] = [x + k * y for x, y in zip(U[i], U[j])]

    def add_col(i, j, k):  # col i += k * col j
        for r in a:
            r[i] += k * r[j]
        for r in V:
            r[i] += k * r[j]

    t = 0
    while t < min(rows, cols):
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        again = True
        while again:
            again = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        swap_rows(t, i)
                        again = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        swap_cols(t, j)
                        again = True
        t += 1
    return U, a, V


def quotient_by_radical(gram) -> Matrix:
    """Gram matrix of the quotient of an integer symmetric form by its
    radical, in some basis of the quotient lattice."""
    m = len(gram)
    rad = kernel_basis_int(gram)
    if not rad:
        return mat(gram)
    _, _, V = snf_transform(rad)
    vinv = mat_inv(mat(V))
    basis = [[int(x) for x in row] for row in vinv]  # rows; first r span radical
    r = len(rad)
    keep = basis[r:]
    out = []
    for u in keep:
        out.append(tuple(sum(u[i] * gram[i][j] * w[j]
                             for i in range(m) for j in range(m)) for w in keep))
    return tuple(out)


def count_short_vectors(gram: Matrix, max_norm: int) -> dict[int, int]:
    """Counts of nonzero vectors of each norm <= max_norm in a positive
    definite integer lattice with the given Gram matrix.

    Simple recursive Fincke-Pohst style enumeration via an LDL^T split.
    """
    n = len(gram)
    if n == 0:
        return {}
    # LDL^T over Q
    L = [[Fraction(0)] * n for _ in range(n)]
    D = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            s = Fraction(gram[i][j]) - sum(L[i][k] * L[j][k] * D[k] for k in range(j))
            L[i][j] = s / D[j]
        D[i] = Fraction(gram[i][i]) - sum(L[i][k] ** 2 * D[k] for k in range(i))
        if D[i] <= 0:
            raise ValueError("gram matrix is not positive definite")
        L[i][i] = Fraction(1)
    counts: dict[int, int] = {}

    # norm(x) = sum_i D_i (x_i + s_i)^2 with s_i = sum_{j>i} L[j][i] x_j
    def enumerate_from(i, remaining, shifts):
        if i < 0:
            norm = max_norm - remaining
            if norm > 0:
                counts[int(norm)] = counts.get(int(norm), 0) + 1
            return
        center = -shifts[i]
        radius = _frac_sqrt_floor(remaining / D[i]) + 1
        x = _ceil_frac(center) - radius
        while x <= center + radius:
            cost = D[i] * (x - center) ** 2
            if cost <= remaining:
                new_shifts = list(shifts)
                for j in range(i):
                    new_shifts[j] += L[i][j] * x
                enumerate_from(i - 1, remaining - cost, new_shifts)
            x += 1

    enumerate_from(n - 1, Fraction(max_norm), [Fraction(0)] * n)
    counts.pop(0, None)
    return counts


def _frac_sqrt_floor(f: Fraction) -> int:
    """floor(sqrt(f)) for f >= 0"""
    from math import isqrt
    if f < 0:
        return -1
    return isqrt(f.numerator * f.denominator) // f.denominator


def _ceil_frac(f) -> int:
    import math
    return math.ceil(f)

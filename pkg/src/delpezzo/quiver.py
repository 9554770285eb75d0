"""Quivers as signed arrow-multiplicity matrices, their combinatorial
mutation, and the Pluecker constraint they satisfy for collections on
surfaces.

c[i][j] > 0 means c[i][j] arrows i -> j; the matrix is antisymmetric, which
already encodes that there are no loops or oriented 2-cycles.
"""
from __future__ import annotations

from dataclasses import dataclass


class QuiverError(ValueError):
    pass


@dataclass(frozen=True)
class Quiver:
    c: tuple[tuple[int, ...], ...]
    alphas: tuple[int, ...] | None = None  # vertex multiplicities, if block data

    def __post_init__(self):
        c = tuple(tuple(row) for row in self.c)
        object.__setattr__(self, "c", c)
        n = len(c)
        for i in range(n):
            if len(c[i]) != n or c[i][i] != 0:
                raise QuiverError("arrow matrix must be square with zero diagonal")
            for j in range(n):
                if c[i][j] != -c[j][i]:
                    raise QuiverError("arrow matrix must be antisymmetric")
        if self.alphas is not None:
            al = tuple(self.alphas)
            object.__setattr__(self, "alphas", al)
            if len(al) != n or any(a <= 0 for a in al):
                raise QuiverError("bad vertex multiplicities")

    @property
    def n(self) -> int:
        return len(self.c)

    def arrows(self, i: int, j: int) -> int:
        return self.c[i][j]


def dwz_mutate(q: Quiver, v: int) -> Quiver:
    """Mutation at vertex v: compose arrows through v, reverse arrows at v,
    cancel the 2-cycles.  On signed multiplicities this is the standard
    antisymmetric exchange-matrix update."""
    n = q.n
    if not 0 <= v < n:
        raise QuiverError(f"vertex {v} out of range")
    c = q.c
    new = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if i == v or j == v:
                new[i][j] = -c[i][j]
            else:
                new[i][j] = c[i][j] + (abs(c[i][v]) * c[v][j] + c[i][v] * abs(c[v][j])) // 2
    return Quiver(tuple(tuple(r) for r in new), q.alphas)


def plucker_holds(q: Quiver) -> bool:
    """c_{ab} c_{cd} - c_{ac} c_{bd} + c_{ad} c_{bc} = 0 for all 4-tuples."""
    n = q.n
    c = q.c
    from itertools import combinations
    for a, b, cc, d in combinations(range(n), 4):
        if c[a][b] * c[cc][d] - c[a][cc] * c[b][d] + c[a][d] * c[b][cc] != 0:
            return False
    return True


def relabel(q: Quiver, perm) -> Quiver:
    """Quiver with vertex i renamed perm[i]."""
    n = q.n
    new = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            new[perm[i]][perm[j]] = q.c[i][j]
    al = None
    if q.alphas is not None:
        al = [0] * n
        for i in range(n):
            al[perm[i]] = q.alphas[i]
        al = tuple(al)
    return Quiver(tuple(tuple(r) for r in new), al)


def reduced_quiver(q: Quiver, blocks) -> Quiver:
    """Collapse consecutive vertex blocks to single vertices with
    multiplicities; arrow counts must be constant across each block."""
    starts, pos = [], 0
    for b in blocks:
        starts.append(pos)
        pos += b
    if pos != q.n:
        raise QuiverError("block sizes do not sum to the vertex count")
    k = len(blocks)
    new = [[0] * k for _ in range(k)]
    for bi in range(k):
        for bj in range(k):
            if bi == bj:
                continue
            vals = {q.c[u][v]
                    for u in range(starts[bi], starts[bi] + blocks[bi])
                    for v in range(starts[bj], starts[bj] + blocks[bj])}
            if len(vals) != 1:
                raise QuiverError("quiver is not regular for these blocks")
            new[bi][bj] = vals.pop()
    return Quiver(tuple(tuple(r) for r in new), tuple(blocks))

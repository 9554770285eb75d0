"""Quiver (cluster) mutations of very strong collections.

A right quiver mutation at an object pushes it rightwards through braid moves
until the collection is very strong again, passing entirely through any
orthogonal block; the left mutation is the mirror.  Each mutation is computed
on the collection (class arithmetic) and independently on the polygon (a
single shear to the opposing vertex); the two routes must agree.
"""
from __future__ import annotations

from dataclasses import dataclass

from .collection import (Collection, braid_left, braid_right, detect_blocks,
                         is_very_strong, rotate_to_unbroken,
                         very_strong_or_false, _wrap_pair)
from .polygon import (HPPolygon, area_x2, long_edges, origin_in_forbidden,
                      polygon_of, polygon_quiver_mutate_left,
                      polygon_quiver_mutate_right, area_delta_sign, cross,
                      unimodular_aligned)
from .quiver import Quiver, dwz_mutate, relabel
from .surfaces import slope


class MutationError(ValueError):
    pass


@dataclass(frozen=True)
class MutationStep:
    collection: Collection
    positions: tuple[int, ...]   # positions[old index] = new index
    braids: tuple[int, ...]      # the tilde sigma indices applied


def _pair_orthogonal(c: Collection, b: int) -> bool:
    """Is the pair acted on by braid b orthogonal (equal slopes)?"""
    s = c.surface
    if b < len(c):
        return slope(c.objects[b - 1], s) == slope(c.objects[b], s)
    e, f = _wrap_pair(c)
    return slope(e, s) == slope(f, s)


def _braid_loop(c: Collection, b0: int, side: str) -> MutationStep:
    n = len(c)
    pos = list(range(n))

    def swap(b):
        i, j = (b - 1, b) if b < n else (n - 1, 0)
        for k in range(n):
            if pos[k] == i:
                pos[k] = j
            elif pos[k] == j:
                pos[k] = i

    b = b0
    braids = []
    for _ in range(2 * n):
        orth = _pair_orthogonal(c, b)
        c = braid_right(c, b) if side == "right" else braid_left(c, b)
        swap(b)
        braids.append(b)
        if not orth and very_strong_or_false(c):
            return MutationStep(c, tuple(pos), tuple(braids))
        b = (b % n) + 1 if side == "right" else (b - 2) % n + 1
    raise MutationError("mutation did not terminate; input was not very strong?")


def quiver_mutate_right(c: Collection, i: int, check: bool = True) -> Collection:
    return quiver_mutate_right_tracked(c, i, check).collection


def quiver_mutate_left(c: Collection, b: int, check: bool = True) -> Collection:
    return quiver_mutate_left_tracked(c, b, check).collection


def quiver_mutate_right_tracked(c: Collection, i: int, check: bool = True) -> MutationStep:
    """Right quiver mutation at object position i (0-based); first braid move
    is tilde sigma_{i+1}^{-1}."""
    if not is_very_strong(c):
        raise MutationError("quiver mutations are defined for very strong collections")
    if not 0 <= i < len(c):
        raise MutationError(f"object index {i} out of range")
    step = _braid_loop(c, i + 1, "right")
    if check:
        _check_routes(c, step, polygon_quiver_mutate_right(polygon_of(c), i))
    return step


def quiver_mutate_left_tracked(c: Collection, b: int, check: bool = True) -> MutationStep:
    """Left quiver mutation whose first braid move is tilde sigma_b
    (1 <= b <= n; b = n starts with the wrap move)."""
    if not is_very_strong(c):
        raise MutationError("quiver mutations are defined for very strong collections")
    if not 1 <= b <= len(c):
        raise MutationError(f"mutation index {b} out of range")
    step = _braid_loop(c, b, "left")
    if check:
        _check_routes(c, step, polygon_quiver_mutate_left(polygon_of(c), b))
    return step


def _check_routes(before: Collection, step: MutationStep, geometric: HPPolygon):
    """The braid route and the polygon (shear) route must give the same
    polygon: on the nose when no wrap move occurred, and up to the canonical
    unimodular renormalization when one did."""
    got = polygon_of(step.collection)
    n = len(before)
    if n not in step.braids:
        ok = got.vertices == geometric.vertices
    else:
        ok = unimodular_aligned(geometric, got)
    if not ok:
        raise MutationError(
            "braid route and polygon route disagree: internal inconsistency")


def apply_mutation_sequence(c: Collection, seq, side: str = "left") -> Collection:
    """Left-to-right application of quiver mutations, each given by the index
    of its first braid move (the convention of the classification tables)."""
    for b in seq:
        if side == "left":
            c = quiver_mutate_left(c, b)
        else:
            c = quiver_mutate_right(c, b - 1 if b >= 1 else b)
    return c


def is_minimal(c: Collection) -> bool:
    """No quiver mutation reduces the total rank: the origin lies in the
    forbidden region of the polygon."""
    if not is_very_strong(c):
        raise MutationError("minimality is defined for very strong collections")
    return origin_in_forbidden(polygon_of(c))


def quiver_of(c: Collection) -> Quiver:
    """Arrow matrix of the collection's quiver, block data attached when the
    collection carries blocks."""
    from .polygon import quiver_matrix
    q = Quiver(quiver_matrix(polygon_of(c)))
    if c.blocks is not None:
        q = Quiver(q.c, tuple(c.blocks))
    return q


def dwz_consistent(c: Collection, i: int) -> bool:
    """DWZ mutation of the quiver matches the quiver of the mutated
    collection after the documented repositioning of the objects."""
    step = quiver_mutate_right_tracked(c, i)
    expected = relabel(dwz_mutate(quiver_of(c.without_blocks()), i), step.positions)
    return expected.c == quiver_of(step.collection).c


# ---------------------------------------------------------------------------
# block mutations

def block_quiver_mutate(c: Collection, block_index: int, side: str = "right") -> Collection:
    """Compose objectwise quiver mutations over one block: last object first
    for right mutations, first object first for left ones."""
    if c.blocks is None:
        c, broken = detect_blocks(c)
        if broken:
            raise MutationError("collection has broken blocks; rotate first")
    if not 0 <= block_index < len(c.blocks):
        raise MutationError(f"block index {block_index} out of range")
    start = sum(c.blocks[:block_index])
    size = c.blocks[block_index]
    # track the objects of the block through the moves
    members = list(range(start, start + size))
    order = list(reversed(members)) if side == "right" else members
    cur = c.without_blocks()
    positions = list(range(len(c)))
    for obj in order:
        at = positions[obj]
        if side == "right":
            step = quiver_mutate_right_tracked(cur, at)
        else:
            # left mutation at the object in position `at` starts with the
            # braid of the same index (the wrap move when at == 0)
            step = quiver_mutate_left_tracked(cur, at if at >= 1 else len(cur))
        cur = step.collection
        positions = [step.positions[p] for p in positions]
    blocked, broken = detect_blocks(cur)
    return blocked


def reduce_to_block_complete(c: Collection) -> Collection:
    """Collapse parallel long edges by block quiver mutations, never
    increasing the total rank, until the reduced quiver is complete."""
    if not is_very_strong(c):
        raise MutationError("reduction is defined for very strong collections")
    cur, broken = detect_blocks(c)
    if broken:
        raise MutationError("collection has broken blocks; rotate first")
    area = area_x2(polygon_of(cur))
    while True:
        cur = rotate_to_unbroken(cur)
        p = polygon_of(cur)
        runs = long_edges(p)
        pair = _parallel_pair(p, runs)
        if pair is None:
            return cur
        bi, bj = pair
        # collapse the side whose mutation does not increase the area; the
        # sign test is Lemma-style: mutate at the first edge of the run
        si = area_delta_sign(p, runs[bi][0])
        choice = bi if si <= 0 else bj
        cur = block_quiver_mutate(cur, choice, "right")
        new_area = area_x2(polygon_of(cur))
        if new_area > area:
            raise MutationError("reduction increased the area: invariant broken")
        area = new_area


def _parallel_pair(p: HPPolygon, runs):
    vecs = [p.edge(r[0]) for r in runs]
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            if cross(vecs[i], vecs[j]) == 0:
                return i, j
    return None

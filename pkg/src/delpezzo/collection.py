"""Ordered numerical exceptional collections and their elementary operations:
Gram matrices, braid mutations, rotations, duals, blocks, equivalence.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .linalg import mat, serre_admissible, serre_matrix
from .surfaces import (NumClass, Surface, degree, euler_form, make_exceptional,
                       slope, surface, twist, twist_canonical, weyl_apply)


class CollectionError(ValueError):
    pass


def normalize_class(e: NumClass, s: Surface) -> NumClass:
    """Flip the global sign so the class looks like a sheaf: r > 0, or r = 0
    and d > 0 (torsion on a (-1)-curve).  A class with r = 0 and d = 0 cannot
    be exceptional; we refuse it."""
    if e.r > 0:
        return e
    if e.r < 0:
        return -e
    d = degree(e, s)
    if d > 0:
        return e
    if d < 0:
        return -e
    raise CollectionError("class with r = 0 and d = 0 cannot be normalized")


@dataclass(frozen=True)
class Collection:
    """An ordered numerically exceptional collection over one surface.

    blocks, when set, is the tuple of consecutive block sizes (summing to the
    length); blocks must consist of orthogonal objects of equal slope.
    """
    surface: Surface
    objects: tuple[NumClass, ...]
    blocks: tuple[int, ...] | None = None

    def __post_init__(self):
        objs = tuple(self.objects)
        object.__setattr__(self, "objects", objs)
        s = self.surface
        for i, e in enumerate(objs):
            if euler_form(e, e, s) != 1:
                raise CollectionError(f"object {i} is not exceptional: {e}")
            for j in range(i + 1, len(objs)):
                if euler_form(objs[j], e, s) != 0:
                    raise CollectionError(
                        f"chi(E_{j}, E_{i}) != 0: not an exceptional collection")
        if self.blocks is not None:
            bl = tuple(self.blocks)
            object.__setattr__(self, "blocks", bl)
            if sum(bl) != len(objs) or any(b <= 0 for b in bl):
                raise CollectionError(f"bad block sizes {bl}")
            pos = 0
            for b in bl:
                mus = {slope(e, s) for e in objs[pos:pos + b]}
                if len(mus) > 1:
                    raise CollectionError("block objects must share one slope")
                pos += b

    def __len__(self):
        return len(self.objects)

    @property
    def is_full(self) -> bool:
        return len(self.objects) == self.surface.rank_k0

    def chi(self, i: int, j: int) -> int:
        return euler_form(self.objects[i], self.objects[j], self.surface)

    def slopes(self):
        return [slope(e, self.surface) for e in self.objects]

    def total_rank(self) -> int:
        return sum(e.r for e in self.objects)

    def without_blocks(self) -> "Collection":
        return replace(self, blocks=None)


def from_data(kind: str, objs, blocks=None) -> Collection:
    """Build a collection from [r, c1] pairs (chi solved from exceptionality)
    or [r, c1, chi] triples for torsion classes."""
    s = surface(kind)
    out = []
    for o in objs:
        if len(o) == 3:
            out.append(NumClass(int(o[0]), s.check_vector(o[1]), int(o[2])))
        else:
            r, c1 = o
            out.append(make_exceptional(int(r), c1, s))
    return Collection(s, tuple(out), tuple(blocks) if blocks else None)


def gram_matrix(c: Collection):
    n = len(c)
    return mat([[c.chi(i, j) for j in range(n)] for i in range(n)])


def reduced_gram(c: Collection):
    """One representative object per block."""
    if c.blocks is None:
        raise CollectionError("collection carries no block structure")
    reps = []
    pos = 0
    for b in c.blocks:
        reps.append(pos)
        pos += b
    return mat([[c.chi(i, j) for j in reps] for i in reps])


def is_very_strong(c: Collection) -> bool:
    """Slope criterion: mu(E_0) <= ... <= mu(E_{n-1}) <= mu(E_0) + K^2."""
    if any(e.r <= 0 for e in c.objects):
        raise CollectionError("very-strongness is only defined for positive ranks")
    mus = c.slopes()
    chain = all(mus[i] <= mus[i + 1] for i in range(len(mus) - 1))
    return chain and mus[-1] <= mus[0] + c.surface.k2


def very_strong_or_false(c: Collection) -> bool:
    """is_very_strong, but rank-0 members simply fail instead of raising."""
    if any(e.r <= 0 for e in c.objects):
        return False
    return is_very_strong(c)


# ---------------------------------------------------------------------------
# braid mutations (tilde sigma_i, 1 <= i <= n, i = n the wrap move)

def _wrap_pair(c: Collection):
    """(E_{n-1}, E_0 (x) omega^{-1}), the pair acted on by the wrap braid."""
    return c.objects[-1], twist_canonical(c.objects[0], -1, c.surface)


def braid_left(c: Collection, i: int) -> Collection:
    """tilde sigma_i: replace (E_{i-1}, E_i) by (L E_i, E_{i-1})."""
    n = len(c)
    s = c.surface
    if not 1 <= i <= n:
        raise CollectionError(f"braid index {i} out of range 1..{n}")
    if i < n:
        a, b = c.objects[i - 1], c.objects[i]
        new = normalize_class(b.sub_multiple(euler_form(a, b, s), a), s)
        objs = c.objects[:i - 1] + (new, a) + c.objects[i + 1:]
    else:
        a, b = _wrap_pair(c)
        new = normalize_class(b.sub_multiple(euler_form(a, b, s), a), s)
        objs = (twist_canonical(a, 1, s),) + c.objects[1:-1] + (new,)
    return Collection(s, objs)


def braid_right(c: Collection, i: int) -> Collection:
    """tilde sigma_i^{-1}: replace (E_{i-1}, E_i) by (E_i, R E_{i-1})."""
    n = len(c)
    s = c.surface
    if not 1 <= i <= n:
        raise CollectionError(f"braid index {i} out of range 1..{n}")
    if i < n:
        a, b = c.objects[i - 1], c.objects[i]
        new = normalize_class(a.sub_multiple(euler_form(a, b, s), b), s)
        objs = c.objects[:i - 1] + (b, new) + c.objects[i + 1:]
    else:
        a, b = _wrap_pair(c)
        new = normalize_class(a.sub_multiple(euler_form(a, b, s), b), s)
        objs = (twist_canonical(new, 1, s),) + c.objects[1:-1] + (b,)
    return Collection(s, objs)


def rotate_left(c: Collection) -> Collection:
    s = c.surface
    return Collection(s, (twist_canonical(c.objects[-1], 1, s),) + c.objects[:-1])


def rotate_right(c: Collection) -> Collection:
    s = c.surface
    return Collection(s, c.objects[1:] + (twist_canonical(c.objects[0], -1, s),))


def tensor_line_bundle(c: Collection, ell) -> Collection:
    s = c.surface
    return Collection(s, tuple(twist(e, 0, ell, s) for e in c.objects), c.blocks)


def apply_weyl(c: Collection, word) -> Collection:
    """Objectwise action of a composition of simple reflections."""
    s = c.surface
    return Collection(s, tuple(weyl_apply(word, e, s) for e in c.objects), c.blocks)


# ---------------------------------------------------------------------------
# dual collections

def right_dual_classes(c: Collection) -> list[NumClass]:
    """Unnormalized right dual classes F_i = R_{E_{n-1}} ... R_{E_{i+1}} E_i.

    These are honest K-theory classes (no sign fixing); used by the polygon
    construction.
    """
    s = c.surface
    n = len(c)
    out = []
    for i in range(n):
        x = c.objects[i]
        for j in range(i + 1, n):
            x = x.sub_multiple(euler_form(x, c.objects[j], s), c.objects[j])
        out.append(x)
    return out


def left_dual_classes(c: Collection) -> list[NumClass]:
    """Unnormalized left dual classes L_{E_0} ... L_{E_{i-1}} E_i."""
    s = c.surface
    out = []
    for i in range(len(c)):
        x = c.objects[i]
        for j in range(i - 1, -1, -1):
            x = x.sub_multiple(euler_form(c.objects[j], x, s), c.objects[j])
        out.append(x)
    return out


def dual_right(c: Collection) -> Collection:
    """The right dual collection (F_{n-1}, ..., F_0), sign-normalized."""
    if len(c) == 1:
        return c
    if not c.is_full:
        raise CollectionError("duals are defined for full collections")
    s = c.surface
    classes = right_dual_classes(c)
    return Collection(s, tuple(normalize_class(x, s) for x in reversed(classes)))


def dual_left(c: Collection) -> Collection:
    if len(c) == 1:
        return c
    if not c.is_full:
        raise CollectionError("duals are defined for full collections")
    s = c.surface
    classes = left_dual_classes(c)
    return Collection(s, tuple(normalize_class(x, s) for x in reversed(classes)))


# ---------------------------------------------------------------------------
# blocks

def detect_blocks(c: Collection):
    """Group maximal runs of equal slope into blocks.

    Returns (collection with blocks set, broken_flag); the flag is true when
    the first and the omega^{-1}-twisted last slopes coincide, i.e. the block
    structure continues across the wrap.
    """
    if not is_very_strong(c):
        raise CollectionError("blocks are defined for very strong collections")
    mus = c.slopes()
    sizes = []
    for mu in mus:
        if sizes and mu == last:
            sizes[-1] += 1
        else:
            sizes.append(1)
        last = mu
    broken = (mus[-1] == mus[0] + c.surface.k2) and len(sizes) > 1
    return replace(c, blocks=tuple(sizes)), broken


def rotate_to_unbroken(c: Collection) -> Collection:
    """Rotate until the block structure does not continue across the wrap."""
    cur = c.without_blocks()
    for _ in range(len(c)):
        blocked, broken = detect_blocks(cur)
        if not broken:
            return blocked
        cur = rotate_right(cur)
    raise CollectionError("no unbroken rotation exists")  # cannot happen: K^2 > 0


# ---------------------------------------------------------------------------
# Serre matrix checks re-exported with collection flavour

def serre_of_gram(gram):
    return serre_matrix(gram)


def gram_serre_admissible(gram) -> bool:
    return serre_admissible(gram)


# ---------------------------------------------------------------------------
# equivalence

def _solve_twist(src: NumClass, dst: NumClass, s: Surface):
    """Integer divisor ell with dst = src (x) O(ell), if any."""
    if src.r != dst.r or src.r == 0:
        return None
    diff = [b - a for a, b in zip(src.c1, dst.c1)]
    if any(d % src.r for d in diff):
        return None
    ell = tuple(d // src.r for d in diff)
    if twist(src, 0, ell, s) != dst:
        return None
    return ell


def equivalent(c1: Collection, c2: Collection):
    """Equivalence of helices: rotations, block-internal reordering, a line
    bundle twist and a global sign.  Returns a witness dict or None.

    Both collections must be full and very strong.
    """
    if c1.surface is not c2.surface:
        raise CollectionError("collections live on different surfaces")
    if not (c1.is_full and c2.is_full):
        raise CollectionError("equivalence is defined for full collections")
    if not (is_very_strong(c1) and is_very_strong(c2)):
        raise CollectionError("equivalence is defined for very strong collections")
    s = c1.surface
    base = rotate_to_unbroken(c1)

    cur = c2.without_blocks()
    for rot in range(len(c2)):
        try:
            cand, broken = detect_blocks(cur)
        except CollectionError:
            broken = True
        if not broken and cand.blocks == base.blocks:
            for sign in (1, -1):
                first = base.objects[0] if sign == 1 else -base.objects[0]
                b0 = cand.blocks[0]
                for g in cand.objects[:b0]:
                    ell = _solve_twist(first, g, s)
                    if ell is None:
                        continue
                    if _twisted_blocks_match(base, cand, sign, ell, s):
                        return {"rotation": rot, "sign": sign, "twist": ell}
        cur = rotate_right(cur)
    return None


def _twisted_blocks_match(base: Collection, cand: Collection, sign, ell, s):
    pos = 0
    for b in base.blocks:
        src = sorted(((twist(e if sign == 1 else -e, 0, ell, s))
                      for e in base.objects[pos:pos + b]),
                     key=lambda x: (x.r, x.c1, x.chi))
        dst = sorted(cand.objects[pos:pos + b], key=lambda x: (x.r, x.c1, x.chi))
        if src != dst:
            return False
        pos += b
    return True

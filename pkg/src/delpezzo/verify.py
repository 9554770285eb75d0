"""Verification drivers for the shipped classification tables: every label's
invariants, every mutation relation, and every symmetry-orbit certificate.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .collection import (Collection, apply_weyl, detect_blocks, equivalent,
                         gram_matrix, is_very_strong, reduced_gram,
                         rotate_right, rotate_to_unbroken)
from .fixtures import (FixtureEntry, SURFACE_IDS, fixture, load_relations,
                       load_surface_fixtures)
from .mutation import apply_mutation_sequence, is_minimal, quiver_of
from .polygon import has_parallel_long_edges, polygon_of
from .quiver import reduced_quiver
from .surfaces import (Surface, euler_form, reflect, sage_word_to_roots,
                       surface, twist_canonical)


@dataclass
class Report:
    checks: list = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = ""):
        self.checks.append((name, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(c[1] for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c[1]]

    def summary(self) -> str:
        lines = [f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  [{d}]" if d else "")
                 for name, ok, d in self.checks]
        lines.append(f"{sum(1 for c in self.checks if c[1])}/{len(self.checks)} passed")
        return "\n".join(lines)


def _expected_quiver_upper(entry: FixtureEntry):
    """Fixture reduced quivers are stored as the upper-triangle arrow counts,
    row by row: (01, 02, 12) for three blocks, (01, 02, 03, 12, 13, 23) for
    four."""
    k = len(entry.alphas)
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    return dict(zip(pairs, entry.reduced_quiver))


def verify_entry(entry: FixtureEntry, report: Report):
    tag = f"{entry.surface} {entry.label}"
    try:
        c = entry.collection()
    except Exception as exc:
        report.add(f"{tag} exceptional", False, str(exc))
        return
    report.add(f"{tag} exceptional", True)
    s = c.surface

    vs = is_very_strong(c)
    report.add(f"{tag} very strong", vs)
    if not vs:
        return

    blocked, broken = detect_blocks(c.without_blocks())
    report.add(f"{tag} blocks", blocked.blocks == entry.alphas and not broken,
               f"found {blocked.blocks}")
    ranks = []
    pos = 0
    for b in blocked.blocks:
        ranks.append(c.objects[pos].r)
        pos += b
    report.add(f"{tag} ranks", tuple(ranks) == entry.ranks, f"found {tuple(ranks)}")

    report.add(f"{tag} reduced Gram", reduced_gram(blocked) == entry.reduced_gram)

    try:
        q = reduced_quiver(quiver_of(c.without_blocks()), blocked.blocks)
        expected = _expected_quiver_upper(entry)
        qok = all(q.c[i][j] == v for (i, j), v in expected.items())
    except Exception as exc:
        qok, q = False, str(exc)
    report.add(f"{tag} reduced quiver", qok)

    report.add(f"{tag} minimal", is_minimal(c))
    report.add(f"{tag} block complete",
               not has_parallel_long_edges(polygon_of(c)))
    report.add(f"{tag} sum alpha + K2 = 12",
               sum(entry.alphas) + s.k2 == 12)

    # work horse identity with the wrap term over block representatives
    reps = []
    pos = 0
    for b in blocked.blocks:
        reps.append(pos)
        pos += b
    terms = []
    for idx, p in enumerate(reps):
        if idx + 1 < len(reps):
            e, f = c.objects[p], c.objects[reps[idx + 1]]
        else:
            e, f = c.objects[p], twist_canonical(c.objects[0], -1, s)
        terms.append(Fraction(euler_form(e, f, s), e.r * f.r))
    report.add(f"{tag} work horse", sum(terms) == s.k2, f"sum {sum(terms)}")


def verify_tables(kinds=None) -> Report:
    report = Report()
    for kind in kinds or SURFACE_IDS:
        for entry in load_surface_fixtures(kind):
            verify_entry(entry, report)
    return report


def fixture_candidate_key(entry: FixtureEntry):
    """The rotation-canonical (alphas, ranks, chis) key of a table entry, for
    comparison with enumerator output."""
    from .classify import Candidate
    c = entry.collection()
    s = c.surface
    reps, pos = [], 0
    for b in entry.alphas:
        reps.append(pos)
        pos += b
    chis = []
    for idx, p in enumerate(reps):
        if idx + 1 < len(reps):
            f = c.objects[reps[idx + 1]]
        else:
            f = twist_canonical(c.objects[0], -1, s)
        chis.append(euler_form(c.objects[p], f, s))
    cand = Candidate(entry.surface, entry.alphas, entry.ranks, tuple(chis),
                     entry.reduced_gram)
    return cand.canonical_key()


def gram_up_to_rotation(result: Collection, target: Collection) -> bool:
    g = gram_matrix(result)
    cur = target
    for _ in range(len(target)):
        if gram_matrix(cur) == g:
            return True
        cur = rotate_right(cur)
    return False


def verify_relations(kinds=None) -> Report:
    report = Report()
    for kind in kinds or SURFACE_IDS:
        for rel in load_relations(kind):
            tag = f"{kind} {rel.source}->{rel.target} {list(rel.sequence)}"
            try:
                src = fixture(kind, rel.source).collection().without_blocks()
                res = apply_mutation_sequence(src, rel.sequence)
                if rel.target == "3*":
                    blocked = rotate_to_unbroken(res)
                    ok = is_very_strong(res) and len(blocked.blocks) == 3
                    det = f"blocks {blocked.blocks}"
                else:
                    tgt = fixture(kind, rel.target).collection().without_blocks()
                    ok = gram_up_to_rotation(res, tgt)
                    det = ""
            except Exception as exc:
                ok, det = False, str(exc)
            report.add(tag, ok, det)
    return report


# ---------------------------------------------------------------------------
# certificates

def all_roots(s: Surface):
    """Every root (rho.rho = -2, K.rho = 0) of the surface lattice."""
    if s.kind == "P1xP1":
        return [(1, -1), (-1, 1)]
    nb = s.picard_rank - 1
    out = []
    for a in range(-4, 5):
        target_sum, target_sq = -3 * a, a * a + 2

        def rec(i, ssum, ssq, acc):
            if ssq > target_sq or abs(target_sum - ssum) > 4 * (nb - i):
                return
            if i == nb:
                if ssum == target_sum and ssq == target_sq:
                    out.append((a,) + tuple(acc))
                return
            for b in range(-4, 5):
                rec(i + 1, ssum + b, ssq + b * b, acc + [b])

        rec(0, 0, 0, [])
    return out


WEYL_ORDERS = {"P2": 1, "P1xP1": 2, "X1": 1, "X2": 2, "X3": 12, "X4": 120,
               "X5": 1920, "X6": 51840, "X7": 2903040, "X8": 696729600}


def weyl_generates(s: Surface, words) -> bool:
    """Do the group elements given by the reflection-index words generate the
    full Weyl group?  Checked through the permutation action on the roots."""
    import sympy.combinatorics as sc
    roots = all_roots(s)
    idx = {r: i for i, r in enumerate(roots)}
    perms = []
    for word in words:
        perm = list(range(len(roots)))
        for i in word:
            rho = s.simple_roots[i]
            perm = [idx[reflect(rho, roots[p], s)] for p in perm]
        perms.append(sc.Permutation(perm))
    if not perms:
        return WEYL_ORDERS[s.kind] == 1
    return sc.PermutationGroup(perms).order() == WEYL_ORDERS[s.kind]


def resolve_certificate_offset(kinds=None) -> int:
    """The certificate words are SageMath reflection labels whose base is
    fixed empirically: the offset under which every shipped certificate
    verifies.  Raises if none works."""
    for offset in (0, 1):
        ok = True
        for kind in kinds or SURFACE_IDS:
            for entry in load_surface_fixtures(kind):
                if not isinstance(entry.orbit, dict):
                    continue
                c = entry.collection().without_blocks()
                s = c.surface
                for w, m in entry.orbit["certificate"]:
                    try:
                        word = sage_word_to_roots(w, s, offset)
                        lhs = apply_weyl(c, word)
                        rhs = apply_mutation_sequence(c, m)
                        if equivalent(lhs, rhs) is None:
                            ok = False
                    except Exception:
                        ok = False
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            return offset
    raise RuntimeError("no certificate index offset verifies all certificates")


def verify_certificates(kinds=None) -> Report:
    report = Report()
    offset = resolve_certificate_offset(kinds)
    report.add("certificate index offset resolved", True, f"offset {offset}")
    for kind in kinds or SURFACE_IDS:
        for entry in load_surface_fixtures(kind):
            tag = f"{kind} {entry.label}"
            orbit = entry.orbit
            if orbit is None:
                continue
            if orbit == "trivial":
                report.add(f"{tag} orbit (trivial group)",
                           WEYL_ORDERS[kind] == 1)
                continue
            c = entry.collection().without_blocks()
            s = c.surface
            if orbit == "reflections":
                ok = all(equivalent(apply_weyl(c, [i]), c) is not None
                         for i in range(len(s.simple_roots)))
                report.add(f"{tag} orbit (each reflection equivalent)", ok)
                gen = weyl_generates(s, [[i] for i in range(len(s.simple_roots))])
                report.add(f"{tag} reflections generate S(X)", gen)
                continue
            words = []
            for pi, (w, m) in enumerate(orbit["certificate"]):
                word = sage_word_to_roots(w, s, offset)
                words.append(word)
                lhs = apply_weyl(c, word)
                rhs = apply_mutation_sequence(c, m)
                report.add(f"{tag} certificate pair {pi}",
                           equivalent(lhs, rhs) is not None)
            report.add(f"{tag} certificate generates S(X)",
                       weyl_generates(s, words))
    return report

#!/usr/bin/env python3
"""Run the bounded enumerator on every surface and diff the result against
the shipped classification tables."""
import sys
import time

from delpezzo.classify import enumerate_minimal
from delpezzo.fixtures import SURFACE_IDS, load_surface_fixtures
from delpezzo.verify import fixture_candidate_key


def main() -> int:
    bad = 0
    for kind in SURFACE_IDS:
        table = {}
        for e in load_surface_fixtures(kind):
            table.setdefault(e.label[0], set()).add(fixture_candidate_key(e))
        for k in (3, 4):
            t0 = time.time()
            got = {c.canonical_key() for c in enumerate_minimal(kind, k)}
            want = table.get(k, set())
            status = "ok" if got == want else "MISMATCH"
            bad += status != "ok"
            print(f"{kind:6s} k={k}: {len(got):2d} candidates, table {len(want):2d}"
                  f"  {status}  ({time.time() - t0:.2f}s)")
            if got != want:
                for extra in got - want:
                    print("   extra:", extra)
                for missing in want - got:
                    print("   missing:", missing)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())

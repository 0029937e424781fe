"""Normality of the rays, parallelepiped and segment families against their closed-form rules."""

import time
from collections import Counter

from hpairs.corpus import run_oracles


def main() -> int:
    t = time.perf_counter()
    results = run_oracles()
    by_suite = Counter()
    fails = []
    for r in results:
        by_suite[r.suite, r.ok] += 1
        if not r.ok:
            fails.append(r)
    for suite in sorted({s for s, _ in by_suite}):
        print(f"{suite}: {by_suite[suite, True]}/{by_suite[suite, True] + by_suite[suite, False]} agree")
    for r in fails:
        print(f"FAIL {r.name}: {r.detail}")
    print(f"elapsed: {time.perf_counter() - t:.2f} s")
    return 1 if fails else 0


if __name__ == "__main__":
    raise SystemExit(main())

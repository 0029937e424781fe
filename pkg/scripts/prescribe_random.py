"""Prescribed-boundary roundtrip on random homogeneous forms.

    python3 scripts/prescribe_random.py --count 100 --seed 43
"""

import argparse
import random
from fractions import Fraction

from hpairs.pipeline import prescribe_boundary
from hpairs.poly import Poly, render


def random_form(rng: random.Random, max_k: int, max_d: int) -> Poly:
    k, d = rng.randint(1, max_k), rng.randint(2, max_d)
    names = [f"z{i}" for i in range(1, k + 1)]
    while True:
        terms = {}
        for _ in range(rng.randint(1, 5)):
            e = [0] * k
            for _ in range(d):
                e[rng.randrange(k)] += 1
            terms[tuple(e)] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        g = Poly(names, {m: c for m, c in terms.items() if c})
        if not g.is_zero():
            return g


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=43)
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--max-d", type=int, default=4)
    p.add_argument("-v", "--verbose", action="store_true")
    args = p.parse_args()
    rng = random.Random(args.seed)
    bad = 0
    for _ in range(args.count):
        g = random_form(rng, args.max_k, args.max_d)
        P = prescribe_boundary(g)
        ok = P.matches and all(P.conditions.values())
        bad += not ok
        if args.verbose or not ok:
            print(f"{'ok  ' if ok else 'FAIL'} n={P.n:2d} g = {render(g)}")
    print(f"{args.count - bad}/{args.count} passed")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Closed-form layers and Gorenstein agreement over enumerated Young diagrams.

    python3 scripts/sweep_young.py --k 2 --max-cells 12 --trials 50
"""

import argparse
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from hpairs.algebra import socle
from hpairs.equation import equation
from hpairs.linalg import nullspace
from hpairs.young import (
    build_hpair,
    closed_form_layers,
    enumerate_diagrams,
    gorenstein_system,
    is_exceptional,
    precorners,
)


@dataclass
class SweepConfig:
    k: int = 2
    max_cells: int = 12
    trials: int = 50
    bound: int = 3
    seed: int = 0


def random_b(rng: random.Random, corners, bound: int) -> dict:
    while True:
        b = {}
        for c in corners:
            q = rng.randint(1, 3)
            b[c] = Fraction(rng.randint(-bound * q, bound * q), q)
        if any(b.values()):
            return b


def sweep(cfg: SweepConfig) -> dict:
    rng = random.Random(cfg.seed)
    diagrams = [D for D in enumerate_diagrams(cfg.k, cfg.max_cells) if not is_exceptional(D)]
    stats = {"diagrams": len(diagrams), "cases": 0, "layer_mismatch": 0, "gorenstein_mismatch": 0,
             "gorenstein": 0}
    for D in diagrams:
        npre = len(precorners(D))
        for _ in range(cfg.trials):
            B = random_b(rng, D.corners, cfg.bound)
            H = build_hpair(D, B)
            r = equation(H)
            if closed_form_layers(D, B) != (r.d, r.layer(r.d), r.layer(r.d - 1)):
                stats["layer_mismatch"] += 1
            gor = socle(H.algebra).dim == 1
            stats["gorenstein"] += gor
            if (nullspace(gorenstein_system(D, B), npre).dim == 0) != gor:
                stats["gorenstein_mismatch"] += 1
            stats["cases"] += 1
    return stats


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(SweepConfig()).items():
        p.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    cfg = SweepConfig(**vars(p.parse_args()))
    t = time.perf_counter()
    stats = sweep(cfg)
    print(cfg)
    for key, value in stats.items():
        print(f"{key}: {value}")
    print(f"elapsed: {time.perf_counter() - t:.1f} s")


if __name__ == "__main__":
    main()

"""Classify seeded cocycles and compare structured, black-box and commutator views.

    python3 scripts/class_survey.py --dims 1 2 3 4 --seeds 5
"""
import argparse
from dataclasses import dataclass, field

import numpy as np

from alphastar import BlackBoxCocycle, classify, coordinate_commutator
from alphastar.catalog import cohomology_dimension, random_cocycle


@dataclass
class SurveyConfig:
    dims: list = field(default_factory=lambda: [1, 2, 3, 4])
    seeds: int = 5
    beta_degree: int = 3


def run(cfg: SurveyConfig) -> list:
    rows = []
    for m in cfg.dims:
        for seed in range(cfg.seeds):
            a = random_cocycle(m, seed, cfg.beta_degree, seed)
            exact = classify(a)
            numeric = classify(BlackBoxCocycle(m, a), count=20, seed=seed)
            C = coordinate_commutator(BlackBoxCocycle(m, a))
            rows.append({
                "m": m, "seed": seed,
                "classify_error": exact.distance(numeric),
                "commutator_error": float(np.max(np.abs(C - 2 * exact.matrix))),
                "pure_imaginary": exact.is_pure_imaginary(),
            })
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--dims", type=int, nargs="+", default=[1, 2, 3, 4])
    parser.add_argument("--seeds", type=int, default=5)
    parser.add_argument("--beta-degree", type=int, default=3)
    args = parser.parse_args()
    cfg = SurveyConfig(args.dims, args.seeds, args.beta_degree)

    print(f"{'m':>2} {'seed':>4} {'|classify err|':>15} {'|C - 2 Theta|':>14} {'alpha*':>6}")
    for r in run(cfg):
        print(f"{r['m']:>2} {r['seed']:>4} {r['classify_error']:>15.2e} "
              f"{r['commutator_error']:>14.2e} {str(r['pure_imaginary']):>6}")
    print()
    print(f"{'m':>2} {'dim H2 alpha':>13} {'dim H2 alpha*':>14}")
    for m in cfg.dims:
        print(f"{m:>2} {cohomology_dimension(m):>13} {cohomology_dimension(m, star=True):>14}")


if __name__ == "__main__":
    main()

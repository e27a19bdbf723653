"""Error of the finite-difference sigma against a closed form, by step and level.

The test cocycle is ``p^T Theta q + d beta`` with the non-polynomial
``beta(x) = exp(c.x) - 1``, whose Hessian is ``c c^T exp(c.x)``.

    python3 scripts/step_convergence.py --m 3 --seed 1
"""
import argparse
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from alphastar import BlackBoxCocycle, StarCocycle
from alphastar import momentum as mv
from alphastar.catalog import random_theta
from alphastar.numdiff import mixed_partial


@dataclass
class ConvergenceConfig:
    m: int = 3
    seed: int = 1
    scale: float = 0.7
    exponents: tuple = (2, 4, 6, 8, 10, 12, 14)


def run(cfg: ConvergenceConfig) -> list:
    harmonic = StarCocycle(random_theta(cfg.m, cfg.seed))
    c = cfg.scale * np.random.default_rng(cfg.seed).uniform(-1, 1, cfg.m)

    def beta(x):
        return np.expm1(c @ mv.to_float(x))

    a = BlackBoxCocycle(cfg.m, lambda p, q: harmonic(p, q) + beta(q) - beta(p)
                        + beta(mv.sub(p, q)))
    p, q = mv.sample_tuples(cfg.m, 2, 1, cfg.seed)[0]
    r = mv.to_float(mv.sub(p, q))
    exact = np.array(harmonic.theta) - np.outer(c, c) * np.exp(c @ r)
    rows = []
    for k in cfg.exponents:
        h = Fraction(1, 2 ** k)
        errs = []
        for levels in (1, 2):
            approx = np.empty_like(exact)
            for i in range(cfg.m):
                for j in range(cfg.m):
                    approx[i, j] = mixed_partial(
                        lambda s, t: a(mv.add(p, mv.unit(cfg.m, i, s)),
                                       mv.add(q, mv.unit(cfg.m, j, t))), h, levels)
            errs.append(float(np.max(np.abs(approx - exact))))
        rows.append((k, *errs))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--m", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1)
    parser.add_argument("--scale", type=float, default=0.7)
    args = parser.parse_args()
    cfg = ConvergenceConfig(args.m, args.seed, args.scale)
    print(f"{'h':>8} {'plain':>10} {'richardson':>11}")
    for k, plain, rich in run(cfg):
        print(f"{'2^-' + str(k):>8} {plain:>10.2e} {rich:>11.2e}")


if __name__ == "__main__":
    main()

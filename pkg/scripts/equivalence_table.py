"""Residuals of the gauged integral identity, per chain length, for both gauge sides.

The "a2 side" multiplies the gauged fields with the product that lacks d beta
(the relation that holds); the "a1 side" is the other assignment.

    python3 scripts/equivalence_table.py --pairs 5 --max-n 4
"""
import argparse
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from alphastar import (Polynomial, StarCocycle, gauge_transform, integral, moyal, star_chain,
                       wick_voros)
from alphastar.catalog import random_beta, random_cocycle, random_modefield, symplectic_theta


@dataclass
class TableConfig:
    pairs: int = 5
    max_n: int = 4
    modes: int = 5
    box: Fraction = Fraction(1, 2)


def _fields(m, cfg, seed):
    count = min(cfg.modes, 3 ** m)
    return [random_modefield(m, count, cfg.box, seed + k, denominator=2, zero_mode=k == 0)
            for k in range(cfg.max_n)]


def _row(label, a1, a2, beta, fields, max_n):
    primed = [gauge_transform(f, beta) for f in fields]
    out = []
    for n in range(1, max_n + 1):
        plain = integral(star_chain(a1, fields[:n]))
        good = abs(integral(star_chain(a2, primed[:n])) - plain)
        bad = abs(integral(star_chain(a1, primed[:n])) - integral(star_chain(a2, fields[:n])))
        out.append((n, good, bad))
    return label, out


def run(cfg: TableConfig) -> list:
    J, S = symplectic_theta(2), np.array([[1.0, 0.3], [0.3, 0.5]])
    rows = [_row("wick-voros / moyal", wick_voros(J, S), moyal(J),
                 Polynomial.quadratic_form(S, -0.5), _fields(2, cfg, 0), cfg.max_n)]
    for seed in range(cfg.pairs):
        m = 1 + seed % 3
        base = random_cocycle(m, seed, 2, seed)
        gauge = random_beta(m, 2, seed + 100)
        shifted = StarCocycle(base.theta, base.beta + gauge)
        rows.append(_row(f"random m={m} seed={seed}", shifted, base, gauge,
                         _fields(m, cfg, 10 * seed), cfg.max_n))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--pairs", type=int, default=5)
    parser.add_argument("--max-n", type=int, default=4, choices=range(1, 5))
    args = parser.parse_args()
    cfg = TableConfig(pairs=args.pairs, max_n=args.max_n)
    print(f"{'pair':<24} {'n':>2} {'a2 side':>10} {'a1 side':>10}")
    for label, entries in run(cfg):
        for n, good, bad in entries:
            print(f"{label:<24} {n:>2} {good:>10.2e} {bad:>10.2e}")


if __name__ == "__main__":
    main()

"""Mixed second derivatives by central differences with Richardson extrapolation.

Offsets are exact rationals (the default step is 2**-10) so the sample points
handed to a cochain stay exact; only the cochain values are floats.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable

DEFAULT_STEP = Fraction(1, 1024)


def central_mixed(f: Callable, h: Fraction) -> complex:
    """Four-point estimate of d^2 f / ds dt at (0, 0); error O(h^2).

    For ``f(s, t) = g(s + t)`` this reduces to a second difference of g with
    step ``2h``, so the same routine covers pure second derivatives.
    """
    return (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4 * float(h) ** 2)


def mixed_partial(f: Callable, h: Fraction = DEFAULT_STEP, levels: int = 2) -> complex:
    """Richardson-extrapolated mixed partial of ``f(s, t)`` at the origin.

    ``levels`` central estimates at h, h/2, ... are combined in a Neville
    table assuming an error series in even powers of h.
    """
    h = Fraction(h)
    table = [central_mixed(f, h / 2 ** k) for k in range(levels)]
    factor = 4
    for _ in range(1, levels):
        table = [(factor * table[k + 1] - table[k]) / (factor - 1)
                 for k in range(len(table) - 1)]
        factor *= 4
    return complex(table[0])

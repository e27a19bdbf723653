"""Exact momentum vectors.

A momentum is a plain ``tuple`` of :class:`fractions.Fraction`. Tuples are
hashable, so momenta double as dictionary keys for mode fields, and all
arithmetic on them is exact.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError

Momentum = tuple  # tuple[Fraction, ...]

SAMPLE_BOX = 2
SAMPLE_DENOMINATOR = 8


def to_rational(x) -> Fraction:
    """Convert an int, Fraction, exact float or ``"n/d"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InputError(f"not a rational number: {x!r}")
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, (float, np.floating)):
        if not np.isfinite(x):
            raise InputError(f"non-finite momentum component: {x!r}")
        return Fraction(float(x))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational string: {x!r}") from exc
    raise InputError(f"not a rational number: {x!r}")


def momentum(coords: Iterable) -> Momentum:
    return tuple(to_rational(c) for c in coords)


def zeros(m: int) -> Momentum:
    return (Fraction(0),) * m


def unit(m: int, axis: int, length=1) -> Momentum:
    v = [Fraction(0)] * m
    v[axis] = to_rational(length)
    return tuple(v)


def add(p: Momentum, q: Momentum) -> Momentum:
    return tuple(a + b for a, b in zip(p, q))


def sub(p: Momentum, q: Momentum) -> Momentum:
    return tuple(a - b for a, b in zip(p, q))


def neg(p: Momentum) -> Momentum:
    return tuple(-a for a in p)


def scale(p: Momentum, t) -> Momentum:
    t = to_rational(t)
    return tuple(t * a for a in p)


def is_zero(p: Momentum) -> bool:
    return all(a == 0 for a in p)


def to_float(p: Sequence) -> np.ndarray:
    return np.array([float(a) for a in p], dtype=float)


def check_dimension(p: Momentum, m: int, what: str = "momentum") -> None:
    if len(p) != m:
        raise InputError(f"{what} has dimension {len(p)}, expected {m}")


def format_rational(x: Fraction) -> str:
    """Always ``"num/den"``, also for integers, so the JSON shape is uniform."""
    return f"{x.numerator}/{x.denominator}"


def random_rational(rng: np.random.Generator, box=SAMPLE_BOX,
                    denominator: int = SAMPLE_DENOMINATOR) -> Fraction:
    """Uniform draw from the grid ``k/denominator`` inside ``[-box, box]``."""
    limit = int(Fraction(box) * denominator)
    return Fraction(int(rng.integers(-limit, limit + 1)), denominator)


def random_momentum(rng: np.random.Generator, m: int, box=SAMPLE_BOX,
                    denominator: int = SAMPLE_DENOMINATOR) -> Momentum:
    return tuple(random_rational(rng, box, denominator) for _ in range(m))


def sample_tuples(m: int, arity: int, count: int, seed: int = 0, box=SAMPLE_BOX,
                  denominator: int = SAMPLE_DENOMINATOR) -> list:
    """``count`` tuples of ``arity`` exact momenta drawn from ``[-box, box]^m``.

    Deterministic in ``seed``. Used by every residual check in the package.
    """
    rng = np.random.default_rng(seed)
    return [tuple(random_momentum(rng, m, box, denominator) for _ in range(arity))
            for _ in range(count)]

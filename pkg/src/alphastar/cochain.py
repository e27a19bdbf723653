"""Cochain spaces C^n(R^m) and the coboundary operator.

An n-cochain is a complex function of n momenta. ``C^1`` requires
``f(0) = 0``; ``C^2`` requires ``f(p, 0) = f(p, p) = 0``; for ``n >= 3`` the
last slot may not be zero and two adjacent arguments may not coincide.

The coboundary uses alternating signs inside the face sum::

    (d f)(p_0..p_n) = eps_n * sum_i (-1)^i f(p_0..^p_i..p_n)
                      + eps_n * (-1)^(n+1) f(p_0 - p_n, ..., p_{n-1} - p_n)

with ``eps_n = 1`` for odd n and ``1j`` for even n. With this choice
``d alpha = 0`` is exactly the associativity identity for 2-cocycles. The
``"literal"`` convention drops the ``(-1)^i`` and exists only so that the
discrepancy can be demonstrated.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from . import momentum as mv
from .errors import InputError, UnsupportedArityError
from .report import Report, sampled_check

MAX_COBOUNDARY_ARITY = 3
CONVENTIONS = ("alternating", "literal")


@dataclass(frozen=True)
class Cochain:
    """An n-argument complex function of exact momenta in R^m."""

    arity: int
    m: int
    fn: Callable[..., complex]
    label: str = ""

    def __post_init__(self):
        if self.arity < 1:
            raise InputError(f"cochain arity must be >= 1, got {self.arity}")
        if self.m < 1:
            raise InputError(f"dimension must be >= 1, got {self.m}")

    def __call__(self, *args) -> complex:
        return complex(self.fn(*args))


def zero_cochain(arity: int, m: int) -> Cochain:
    return Cochain(arity, m, lambda *args: 0j, "zero")


def as_cochain(obj) -> Cochain:
    """Accept a Cochain or any cocycle-like object with ``arity`` and ``m``."""
    if isinstance(obj, Cochain):
        return obj
    try:
        return Cochain(obj.arity, obj.m, obj, getattr(obj, "label", ""))
    except AttributeError as exc:
        raise InputError(f"not a cochain: {obj!r}") from exc


def eval_cochain(c, args: Sequence) -> complex:
    c = as_cochain(c)
    if len(args) != c.arity:
        raise InputError(f"cochain of arity {c.arity} called with {len(args)} arguments")
    args = [mv.momentum(a) for a in args]
    for a in args:
        mv.check_dimension(a, c.m)
    return c(*args)


def _epsilon(n: int) -> complex:
    return 1 if n % 2 else 1j


def coboundary(c, convention: str = "alternating") -> Cochain:
    """The (n+1)-cochain ``d c`` for an n-cochain with ``1 <= n <= 3``."""
    c = as_cochain(c)
    n = c.arity
    if not 1 <= n <= MAX_COBOUNDARY_ARITY:
        raise UnsupportedArityError(f"coboundary implemented for arity 1..3, got {n}")
    if convention not in CONVENTIONS:
        raise InputError(f"unknown sign convention {convention!r}")
    eps = _epsilon(n)
    alternating = convention == "alternating"
    tail_sign = (-1) ** (n + 1)

    def d(*ps):
        total = 0j
        for i in range(n + 1):
            face = c(*(ps[:i] + ps[i + 1:]))
            total += -face if alternating and i % 2 else face
        last = ps[n]
        total += tail_sign * c(*(mv.sub(p, last) for p in ps[:n]))
        return eps * total

    label = f"d({c.label})" if c.label else "d(.)"
    return Cochain(n + 1, c.m, d, label)


def check_membership(c, samples: Sequence | None = None, tol: float = 1e-12, *,
                     count: int = 50, seed: int = 0) -> Report:
    """Sample the vanishing conditions that define ``C^n``.

    ``samples`` are n-tuples of momenta; each tuple is used to build the
    degenerate argument lists (last slot zero, adjacent slots equal).
    """
    c = as_cochain(c)
    n, m = c.arity, c.m
    if samples is None:
        samples = mv.sample_tuples(m, n, count, seed)
    zero = mv.zeros(m)
    last_zero, adjacent = [], []
    for args in samples:
        args = tuple(args)
        last_zero.append(abs(c(*(args[:-1] + (zero,)))))
        if n == 2:
            adjacent.append(abs(c(args[0], args[0])))
        elif n >= 3:
            # positions k, k+1 both carry args[0]; the rest fill in order
            for k in range(n - 1):
                rest = list(args[1:])
                filled = rest[:k] + [args[0], args[0]] + rest[k:]
                adjacent.append(abs(c(*filled[:n])))
    checks = [sampled_check("last argument zero", last_zero, tol)]
    if n >= 2:
        checks.append(sampled_check("adjacent arguments equal", adjacent, tol))
    return Report(f"membership in C^{n}", tuple(checks))


def check_d_squared_zero(c, samples: Sequence | None = None, tol: float = 1e-12, *,
                         count: int = 50, seed: int = 0) -> Report:
    """Evaluate ``d(d c)`` on samples and report the largest magnitude.

    Requires arity <= 2 so that ``d d c`` has arity <= 4.
    """
    c = as_cochain(c)
    if c.arity > 2:
        raise UnsupportedArityError(f"d(d c) needs arity <= 2, got {c.arity}")
    dd = coboundary(coboundary(c))
    if samples is None:
        samples = mv.sample_tuples(c.m, dd.arity, count, seed)
    values = [abs(dd(*args)) for args in samples]
    return Report("d o d = 0", (sampled_check(f"|d d c| (arity {dd.arity})", values, tol),))

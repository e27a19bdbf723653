"""Finite Fourier-mode sums and the translation-invariant star product.

A :class:`ModeField` is ``sum_k c_k exp(i p_k . x)`` with exact rational
frequencies ``p_k``. The product of two fields under a cocycle ``alpha`` is

    (f * g) = sum_{q in f, p in g} f_q g_p exp(alpha(p + q, q)) e_{p+q}

Frequency sums are exact, so colliding modes always merge. Pairs are visited
in sorted frequency order, which makes every result bit-reproducible.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import momentum as mv
from .errors import InputError, RangeError

PRUNE_TOL = 1e-15
EXP_LIMIT = 700.0


class ModeField:
    """Immutable finite mode sum; coefficients with ``|c| <= 1e-15`` are dropped."""

    __slots__ = ("m", "_modes")

    def __init__(self, m: int, modes: Mapping | Iterable = ()):
        if m < 1:
            raise InputError(f"dimension must be >= 1, got {m}")
        items = modes.items() if isinstance(modes, Mapping) else modes
        merged: dict = {}
        for freq, c in items:
            freq = mv.momentum(freq)
            mv.check_dimension(freq, m, "frequency")
            merged[freq] = merged.get(freq, 0j) + complex(c)
        self.m = m
        self._modes = MappingProxyType(
            {k: v for k, v in sorted(merged.items()) if abs(v) > PRUNE_TOL})

    @classmethod
    def zero(cls, m: int) -> "ModeField":
        return cls(m)

    @classmethod
    def unit(cls, m: int) -> "ModeField":
        return cls(m, {mv.zeros(m): 1.0})

    @classmethod
    def plane_wave(cls, freq, coeff: complex = 1.0) -> "ModeField":
        freq = mv.momentum(freq)
        return cls(len(freq), {freq: coeff})

    @property
    def modes(self) -> Mapping:
        return self._modes

    def __len__(self):
        return len(self._modes)

    def __iter__(self):
        return iter(self._modes.items())

    def coefficient(self, freq) -> complex:
        return self._modes.get(mv.momentum(freq), 0j)

    def __eq__(self, other):
        if not isinstance(other, ModeField):
            return NotImplemented
        return self.m == other.m and dict(self._modes) == dict(other._modes)

    __hash__ = None

    def __repr__(self):
        return f"ModeField(m={self.m}, modes={len(self._modes)})"

    def _check(self, other: "ModeField"):
        if self.m != other.m:
            raise InputError(f"dimension mismatch: {self.m} vs {other.m}")

    def __add__(self, other: "ModeField") -> "ModeField":
        self._check(other)
        return ModeField(self.m, list(self) + list(other))

    def __neg__(self) -> "ModeField":
        return ModeField(self.m, {k: -c for k, c in self})

    def __sub__(self, other: "ModeField") -> "ModeField":
        return self + (-other)

    def __mul__(self, factor) -> "ModeField":
        factor = complex(factor)
        return ModeField(self.m, {k: factor * c for k, c in self})

    __rmul__ = __mul__

    def conj(self) -> "ModeField":
        """Complex conjugate function: ``conj(c_p)`` moves to frequency ``-p``."""
        return ModeField(self.m, {mv.neg(k): c.conjugate() for k, c in self})

    def max_abs(self) -> float:
        return max((abs(c) for c in self._modes.values()), default=0.0)

    def distance(self, other: "ModeField") -> float:
        """Largest coefficient difference over the union of supports."""
        self._check(other)
        keys = set(self._modes) | set(other._modes)
        return max((abs(self._modes.get(k, 0j) - other._modes.get(k, 0j)) for k in keys),
                   default=0.0)

    def evaluate(self, x) -> complex:
        """Point value ``sum c_p exp(i p.x)`` (``x`` real)."""
        x = np.asarray(x, dtype=float)
        return sum((c * cmath.exp(1j * float(mv.to_float(k) @ x)) for k, c in self), 0j)


def _check_dims(a, *fields):
    for f in fields:
        if f.m != a.m:
            raise InputError(f"field has dimension {f.m}, cocycle has {a.m}")


def star(a, f: ModeField, g: ModeField) -> ModeField:
    """Star product of two mode fields under the cocycle ``a``."""
    _check_dims(a, f, g)
    out: dict = {}
    g_items = list(g)
    for q, fq in f:
        for p, gp in g_items:
            s = mv.add(p, q)
            phase = a(s, q)
            if abs(phase.real) > EXP_LIMIT:
                raise RangeError(
                    f"Re alpha(p+q, q) = {phase.real:.4g} exceeds {EXP_LIMIT} "
                    f"at q={_fmt(q)}, p={_fmt(p)}")
            out[s] = out.get(s, 0j) + fq * gp * cmath.exp(phase)
    return ModeField(a.m, out)


def _fmt(p) -> str:
    return "(" + ", ".join(str(x) for x in p) + ")"


def star_chain(a, fields: Sequence[ModeField]) -> ModeField:
    """Left-associated product ``((f1 * f2) * f3) * ...``."""
    if not fields:
        raise InputError("star_chain needs at least one field")
    out = fields[0]
    _check_dims(a, out)
    for f in fields[1:]:
        out = star(a, out, f)
    return out


def star_chain_right(a, fields: Sequence[ModeField]) -> ModeField:
    """Right-associated product ``f1 * (f2 * (f3 * ...))``."""
    if not fields:
        raise InputError("star_chain needs at least one field")
    out = fields[-1]
    _check_dims(a, out)
    for f in reversed(fields[:-1]):
        out = star(a, f, out)
    return out


def integral(f: ModeField) -> complex:
    """Zero-mode coefficient; the common ``(2 pi)^m delta(0)`` factor is dropped."""
    return f.coefficient(mv.zeros(f.m))


def translate(f: ModeField, shift) -> ModeField:
    """``f(x + shift)``: coefficient at ``p`` times ``exp(i p.shift)``."""
    shift = np.asarray(shift, dtype=float)
    if shift.shape != (f.m,):
        raise InputError(f"shift must have shape ({f.m},), got {shift.shape}")
    return ModeField(f.m, {k: c * cmath.exp(1j * float(mv.to_float(k) @ shift)) for k, c in f})


def derivative(f: ModeField, axis: int) -> ModeField:
    """``d f / d x^axis`` (0-based axis): coefficient at ``p`` times ``i p_axis``."""
    if not 0 <= axis < f.m:
        raise InputError(f"axis {axis} out of range for m={f.m}")
    return ModeField(f.m, {k: 1j * float(k[axis]) * c for k, c in f})


def associativity_defect(a, f: ModeField, g: ModeField, h: ModeField) -> float:
    """Relative coefficient gap between ``(f*g)*h`` and ``f*(g*h)``."""
    left = star(a, star(a, f, g), h)
    right = star(a, f, star(a, g, h))
    return left.distance(right) / max(1.0, left.max_abs(), right.max_abs())


def associativity_witness(a, triples: Iterable):
    """Plane waves turning a failed cocycle identity into non-associativity.

    For each momentum triple ``(P, Q, R)`` the plane waves ``e_R``,
    ``e_{Q-R}``, ``e_{P-Q}`` are multiplied in both orders. Returns
    ``(f, g, h, defect)`` for the worst triple, or ``None`` if none given.
    """
    best = None
    for P, Q, R in triples:
        f = ModeField.plane_wave(R)
        g = ModeField.plane_wave(mv.sub(Q, R))
        h = ModeField.plane_wave(mv.sub(P, Q))
        d = associativity_defect(a, f, g, h)
        if best is None or d > best[3]:
            best = (f, g, h, d)
    return best


def commutativity_witness(a, tol: float = 1e-9, denominators=(8, 4, 2, 1)):
    """Pair of plane waves with ``e_q * e_p != e_p * e_q``, or ``None``.

    Scans pairs of coordinate directions at several small lengths so that a
    phase difference landing on a multiple of ``2 pi i`` is not missed.
    """
    m = a.m
    candidates = [(mv.unit(m, i, Fraction(k, den)), mv.unit(m, j, Fraction(1, den)))
                  for den in denominators for i in range(m) for j in range(m)
                  if i != j for k in (1, 3)]
    for q, p in candidates:
        f, g = ModeField.plane_wave(q), ModeField.plane_wave(p)
        gap = star(a, f, g).distance(star(a, g, f))
        if gap > tol:
            return f, g, gap
    return None

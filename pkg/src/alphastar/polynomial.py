"""Sparse multivariate polynomials with complex coefficients.

Used for the 1-cochain ``beta`` of a structured cocycle and for gauge
transforms. Monomials are evaluated exactly on rational momenta and only the
final product with the coefficient is done in floating point.
"""
from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .errors import InputError

MAX_DEGREE = 6


def _monomial(p, exps) -> Fraction:
    value = 1
    for x, e in zip(p, exps):
        if e:
            value *= x ** e
    return value


class Polynomial:
    """``sum_k c_k * prod_i p_i ** e_ki`` over ``m`` variables.

    ``coeffs`` maps exponent tuples to complex coefficients. Zero coefficients
    are dropped, so two equal polynomials have equal ``coeffs``.

    >>> beta = Polynomial(2, {(2, 0): 1.0, (1, 1): 1.0})
    >>> beta((2, 3))
    (10+0j)
    """

    __slots__ = ("m", "_coeffs")

    def __init__(self, m: int, coeffs: Mapping | None = None):
        if m < 1:
            raise InputError(f"polynomial dimension must be >= 1, got {m}")
        clean = {}
        for exps, c in (coeffs or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != m or any(e < 0 for e in exps):
                raise InputError(f"bad multi-index {exps} for m={m}")
            c = complex(c)
            if not (np.isfinite(c.real) and np.isfinite(c.imag)):
                raise InputError(f"non-finite coefficient at {exps}")
            if c != 0:
                clean[exps] = clean.get(exps, 0) + c
        self.m = m
        self._coeffs = MappingProxyType(dict(sorted(clean.items())))

    @property
    def coeffs(self) -> Mapping:
        return self._coeffs

    @classmethod
    def zero(cls, m: int) -> "Polynomial":
        return cls(m)

    @classmethod
    def quadratic_form(cls, matrix, factor=1.0) -> "Polynomial":
        """``factor * p^T matrix p`` as a polynomial."""
        matrix = np.asarray(matrix)
        m = matrix.shape[0]
        coeffs = {}
        for i in range(m):
            for j in range(m):
                exps = [0] * m
                exps[i] += 1
                exps[j] += 1
                key = tuple(exps)
                coeffs[key] = coeffs.get(key, 0) + factor * matrix[i, j]
        return cls(m, coeffs)

    def __call__(self, p) -> complex:
        total = 0j
        for exps, c in self._coeffs.items():
            total += c * float(_monomial(p, exps))
        return total

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.m == other.m and dict(self._coeffs) == dict(other._coeffs)

    def __hash__(self):
        return hash((self.m, tuple(self._coeffs.items())))

    def __repr__(self):
        return f"Polynomial({self.m}, {dict(self._coeffs)!r})"

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._same_dim(other)
        coeffs = dict(self._coeffs)
        for k, c in other._coeffs.items():
            coeffs[k] = coeffs.get(k, 0) + c
        return Polynomial(self.m, coeffs)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.m, {k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, factor) -> "Polynomial":
        factor = complex(factor)
        return Polynomial(self.m, {k: factor * c for k, c in self._coeffs.items()})

    __rmul__ = __mul__

    def _same_dim(self, other):
        if self.m != other.m:
            raise InputError(f"dimension mismatch: {self.m} vs {other.m}")

    @property
    def degree(self) -> int:
        return max((sum(k) for k in self._coeffs), default=0)

    @property
    def constant_term(self) -> complex:
        return self._coeffs.get((0,) * self.m, 0j)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_real(self) -> bool:
        return all(c.imag == 0 for c in self._coeffs.values())

    def partial(self, axis: int) -> "Polynomial":
        coeffs = {}
        for exps, c in self._coeffs.items():
            e = exps[axis]
            if e:
                lowered = exps[:axis] + (e - 1,) + exps[axis + 1:]
                coeffs[lowered] = c * e
        return Polynomial(self.m, coeffs)

    def hessian(self, p) -> np.ndarray:
        out = np.zeros((self.m, self.m), dtype=complex)
        for i in range(self.m):
            d_i = self.partial(i)
            for j in range(i, self.m):
                out[i, j] = out[j, i] = d_i.partial(j)(p)
        return out

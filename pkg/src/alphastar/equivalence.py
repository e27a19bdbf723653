"""Gauge transforms and the integral identity for cohomologous products.

If ``alpha1 = alpha2 + d beta`` then the gauge map ``f -> f'`` with
``f'_p = f_p exp(beta(p))`` intertwines the products:
``(f *_1 g)' = f' *_2 g'``. Because ``beta(0) = 0`` the zero mode is left
alone, so for every n

    integral(f'_1 *_2 ... *_2 f'_n) == integral(f_1 *_1 ... *_1 f_n).

The primed fields are multiplied with ``alpha2``, the product whose
cocycle does not contain ``d beta``.
"""
from __future__ import annotations

import cmath
from typing import Sequence

import numpy as np

from . import momentum as mv
from .cochain import Cochain, coboundary
from .cocycle import check_same_dimension
from .errors import InputError, RangeError, ValidationError
from .modefield import EXP_LIMIT, ModeField, integral, star
from .polynomial import Polynomial
from .report import Check, Report, relative_residual, sampled_check


def _check_gauge(beta: Polynomial, m: int):
    if beta.m != m:
        raise InputError(f"beta has dimension {beta.m}, expected {m}")
    if beta.constant_term != 0:
        raise ValidationError("gauge cochain needs beta(0) = 0",
                              Report("gauge cochain", (Check("beta(0)", abs(beta.constant_term), 0.0),)))


def gauge_transform(f: ModeField, beta: Polynomial) -> ModeField:
    """Multiply the coefficient at ``p`` by ``exp(beta(p))``; support unchanged."""
    _check_gauge(beta, f.m)
    out = {}
    for p, c in f:
        b = beta(p)
        if abs(b.real) > EXP_LIMIT:
            raise RangeError(f"Re beta(p) = {b.real:.4g} exceeds {EXP_LIMIT} "
                             f"at frequency ({', '.join(map(str, p))})")
        out[p] = c * cmath.exp(b)
    return ModeField(f.m, out)


def chain_with_scale(a, fields: Sequence[ModeField]) -> tuple:
    """Left-associated product and the largest coefficient seen on the way."""
    if not fields:
        raise InputError("need at least one field")
    out = fields[0]
    biggest = out.max_abs()
    for f in fields[1:]:
        biggest = max(biggest, f.max_abs())
        out = star(a, out, f)
        biggest = max(biggest, out.max_abs())
    return out, biggest


def check_gauge_relation(a1, a2, beta: Polynomial, samples=None, tol: float = 1e-9, *,
                         count: int = 50, seed: int = 0) -> Check:
    """Pointwise residual of ``alpha1 - alpha2 - d beta``."""
    db = coboundary(Cochain(1, beta.m, beta, "beta"))
    if samples is None:
        samples = mv.sample_tuples(a1.m, 2, count, seed)
    res = []
    for p, q in samples:
        u, v, w = a1(p, q), a2(p, q), db(p, q)
        res.append(relative_residual(u - v - w, u, v, w))
    return sampled_check("alpha1 - alpha2 - d beta", res, tol)


def check_quantum_equivalence(a1, a2, beta: Polynomial, fields: Sequence[ModeField],
                              tol: float = 1e-9, *, every_n: bool = True,
                              count: int = 50, seed: int = 0) -> Report:
    """Compare ``integral(f'_1 *_2 ... f'_n)`` with ``integral(f_1 *_1 ... f_n)``.

    The relation ``alpha1 = alpha2 + d beta`` is checked pointwise first; if it
    fails the report carries only that precondition check. With ``every_n``
    each prefix of ``fields`` is tested, giving one row per n. Residuals are
    relative to the largest intermediate coefficient.
    """
    m = check_same_dimension(a1, a2)
    _check_gauge(beta, m)
    if not fields:
        raise InputError("need at least one field")
    for f in fields:
        if f.m != m:
            raise InputError(f"field has dimension {f.m}, cocycles have {m}")
    pre = check_gauge_relation(a1, a2, beta, tol=tol, count=count, seed=seed)
    if not pre.passed:
        return Report("quantum equivalence (precondition failed)", (pre,))
    primed = [gauge_transform(f, beta) for f in fields]
    checks = [pre]
    sizes = range(1, len(fields) + 1) if every_n else [len(fields)]
    for n in sizes:
        lhs, s1 = chain_with_scale(a2, primed[:n])
        rhs, s2 = chain_with_scale(a1, fields[:n])
        u, v = integral(lhs), integral(rhs)
        residual = abs(u - v) / max(1.0, s1, s2)
        checks.append(Check(f"n={n}", residual, tol,
                            {"gauged_side": [u.real, u.imag], "plain_side": [v.real, v.imag]}))
    return Report("quantum equivalence", tuple(checks))


def check_trace_property(a, fields: Sequence[ModeField], tol: float = 1e-10,
                         rotations: int = 1) -> Report:
    """Cyclic rotation ``f_k * f_1 * ... * f_{k-1}`` leaves the integral unchanged.

    ``rotations`` successive rotations are compared against the original;
    ``rotations = len(fields)`` closes the cycle.
    """
    fields = list(fields)
    base, scale = chain_with_scale(a, fields)
    ref = integral(base)
    checks = []
    current = fields
    for k in range(1, rotations + 1):
        current = current[-1:] + current[:-1]
        out, s = chain_with_scale(a, current)
        v = integral(out)
        checks.append(Check(f"rotation {k}", abs(v - ref) / max(1.0, scale, s), tol,
                            {"value": [v.real, v.imag], "reference": [ref.real, ref.imag]}))
    return Report("trace property", tuple(checks))


def nonequivalence_witness(a1, a2, beta: Polynomial, trials: int = 1000, seed: int = 0,
                           threshold: float = 1e-6, freq_box=2, denominator: int = 8):
    """Search seeded plane-wave triples ``e_q, e_p, e_{-p-q}`` violating the identity.

    Returns ``(fields, residual, trial)`` for the first violation above
    ``threshold`` or ``None`` after ``trials`` attempts. The preconditions of
    :func:`check_quantum_equivalence` are not required here.
    """
    m = check_same_dimension(a1, a2)
    _check_gauge(beta, m)
    rng = np.random.default_rng(seed)
    for trial in range(trials):
        q = mv.random_momentum(rng, m, freq_box, denominator)
        p = mv.random_momentum(rng, m, freq_box, denominator)
        fields = [ModeField.plane_wave(q), ModeField.plane_wave(p),
                  ModeField.plane_wave(mv.neg(mv.add(p, q)))]
        primed = [gauge_transform(f, beta) for f in fields]
        lhs, s1 = chain_with_scale(a2, primed)
        rhs, s2 = chain_with_scale(a1, fields)
        residual = abs(integral(lhs) - integral(rhs)) / max(1.0, s1, s2)
        if residual > threshold:
            return fields, residual, trial
    return None

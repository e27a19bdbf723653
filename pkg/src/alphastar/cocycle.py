"""Two-cocycles generating translation-invariant star products.

Two concrete kinds are supported:

* :class:`StarCocycle` -- ``alpha(p, q) = p^T theta q + (d beta)(p, q)`` with
  ``theta`` antisymmetric and ``beta`` a polynomial without constant term.
  Cocycle and unitality hold by construction and the harmonic part is known.
* :class:`BlackBoxCocycle` -- any callable; every property has to be checked
  by sampling and derivatives come from finite differences.

Every function here accepts either kind.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from . import momentum as mv
from .cochain import Cochain, coboundary
from .errors import InputError, ValidationError
from .numdiff import DEFAULT_STEP, mixed_partial
from .polynomial import MAX_DEGREE, Polynomial
from .report import Check, Report, merge, relative_residual, sampled_check

DEFAULT_COUNT = 100
DEFAULT_SEED = 0


class StarCocycle:
    """Structured 2-cocycle ``p^T theta q + beta(q) - beta(p) + beta(p - q)``.

    ``theta`` must be exactly antisymmetric (complex entries allowed); it is the
    harmonic representative in the ``p^i theta_ij q^j`` orientation.
    """

    arity = 2

    def __init__(self, theta, beta: Polynomial | None = None, label: str = ""):
        theta = np.array(theta, dtype=complex)
        if theta.ndim != 2 or theta.shape[0] != theta.shape[1] or theta.shape[0] < 1:
            raise InputError(f"theta must be a non-empty square matrix, got shape {theta.shape}")
        if not np.all(np.isfinite(theta)):
            raise InputError("theta has non-finite entries")
        m = theta.shape[0]
        asym = float(np.max(np.abs(theta + theta.T)))
        if asym != 0:
            report = Report("structured cocycle", (Check("theta antisymmetry", asym, 0.0),))
            raise ValidationError("theta is not antisymmetric", report)
        beta = Polynomial.zero(m) if beta is None else beta
        if beta.m != m:
            raise InputError(f"beta has dimension {beta.m}, theta has {m}")
        if beta.constant_term != 0:
            report = Report("structured cocycle",
                            (Check("beta(0)", abs(beta.constant_term), 0.0),))
            raise ValidationError("beta must have zero constant term", report)
        if beta.degree > MAX_DEGREE:
            raise InputError(f"beta degree {beta.degree} exceeds cap {MAX_DEGREE}")
        theta.setflags(write=False)
        self.m = m
        self.theta = theta
        self.beta = beta
        self.label = label
        self._pairs = [(i, j, theta[i, j]) for i in range(m) for j in range(i + 1, m)
                       if theta[i, j] != 0]

    def harmonic(self, p, q) -> complex:
        # exact bracket so that alpha(p, p) vanishes without rounding
        total = 0j
        for i, j, t in self._pairs:
            total += t * float(p[i] * q[j] - p[j] * q[i])
        return total

    def coboundary_part(self, p, q) -> complex:
        beta = self.beta
        if not beta.coeffs:
            return 0j
        return beta(q) - beta(p) + beta(mv.sub(p, q))

    def __call__(self, p, q) -> complex:
        return self.harmonic(p, q) + self.coboundary_part(p, q)

    def is_harmonic(self) -> bool:
        return self.beta.is_zero()

    def __repr__(self):
        name = f" {self.label!r}" if self.label else ""
        return f"<StarCocycle{name} m={self.m} beta_terms={len(self.beta.coeffs)}>"


@dataclass(frozen=True)
class BlackBoxCocycle:
    """A 2-cochain given only as a function; validity is checked by sampling."""

    m: int
    fn: Callable
    label: str = ""

    arity = 2

    def __call__(self, p, q) -> complex:
        return complex(self.fn(p, q))


@dataclass(frozen=True, eq=False)
class ThetaClass:
    """Antisymmetric matrix labelling an alpha-cohomology class.

    ``matrix`` is in the ``alpha_H(p, q) = p^T matrix q`` orientation. The
    real matrix ``theta`` with ``alpha_H = i p^T theta q`` is ``real_theta``,
    and the Moyal matrix ``theta_A`` with ``alpha = i q^T theta_A p`` is its
    negative.
    """

    matrix: np.ndarray

    @property
    def m(self) -> int:
        return self.matrix.shape[0]

    @property
    def real_theta(self) -> np.ndarray:
        return -1j * self.matrix

    @property
    def moyal_theta(self) -> np.ndarray:
        return 1j * self.matrix

    def is_pure_imaginary(self, tol: float = 0.0) -> bool:
        return bool(np.all(np.abs(self.matrix.real) <= tol))

    def antisymmetry_residual(self) -> float:
        return float(np.max(np.abs(self.matrix + self.matrix.T), initial=0.0))

    def distance(self, other: "ThetaClass") -> float:
        if other.m != self.m:
            raise InputError(f"dimension mismatch: {self.m} vs {other.m}")
        return float(np.max(np.abs(self.matrix - other.matrix), initial=0.0))

    def __eq__(self, other):
        if not isinstance(other, ThetaClass):
            return NotImplemented
        return self.m == other.m and np.array_equal(self.matrix, other.matrix)

    __hash__ = None


def check_same_dimension(*cocycles) -> int:
    dims = {a.m for a in cocycles}
    if len(dims) != 1:
        raise InputError(f"dimension mismatch between cocycles: {sorted(dims)}")
    return dims.pop()


def eval_alpha(a, p, q) -> complex:
    p, q = mv.momentum(p), mv.momentum(q)
    mv.check_dimension(p, a.m, "p")
    mv.check_dimension(q, a.m, "q")
    return a(p, q)


def _pairs(a, samples, count, seed):
    return mv.sample_tuples(a.m, 2, count, seed) if samples is None else samples


def check_cocycle_condition(a, samples: Sequence | None = None, tol: float = 1e-10, *,
                            count: int = DEFAULT_COUNT, seed: int = DEFAULT_SEED) -> Report:
    """Associativity identity on sampled triples.

    Residual per triple: ``alpha(p,q) + alpha(q,r) - alpha(p,r) - alpha(p-r,q-r)``,
    scaled by the largest term when that exceeds one.
    """
    if samples is None:
        samples = mv.sample_tuples(a.m, 3, count, seed)
    res = []
    for p, q, r in samples:
        terms = (a(p, q), a(q, r), a(p, r), a(mv.sub(p, r), mv.sub(q, r)))
        res.append(relative_residual(terms[0] + terms[1] - terms[2] - terms[3], *terms))
    return Report("cocycle condition", (sampled_check("associativity identity", res, tol),))


def check_unitality(a, samples: Sequence | None = None, tol: float = 1e-12, *,
                    count: int = DEFAULT_COUNT, seed: int = DEFAULT_SEED) -> Report:
    """``alpha(p, 0) = alpha(p, p) = 0`` and the corollary ``alpha(0, p) = alpha(0, -p)``."""
    if samples is None:
        samples = mv.sample_tuples(a.m, 1, count, seed)
    points = [s[0] if isinstance(s[0], tuple) else s for s in samples]
    zero = mv.zeros(a.m)
    at_zero = [abs(a(p, zero)) for p in points]
    at_diag = [abs(a(p, p)) for p in points]
    even = []
    for p in points:
        u, v = a(zero, p), a(zero, mv.neg(p))
        even.append(relative_residual(u - v, u, v))
    return Report("unitality", (
        sampled_check("alpha(p,0)", at_zero, tol),
        sampled_check("alpha(p,p)", at_diag, tol),
        sampled_check("alpha(0,p)-alpha(0,-p)", even, tol),
    ))


def check_harmonic(a, samples: Sequence | None = None, tol: float = 1e-10, *,
                   count: int = DEFAULT_COUNT, seed: int = DEFAULT_SEED) -> Report:
    """The three symmetry axioms of a harmonic form."""
    samples = _pairs(a, samples, count, seed)
    r1, r2, r3 = [], [], []
    for p, q in samples:
        v = a(p, q)
        w1, w2, w3 = a(p, mv.sub(p, q)), a(mv.neg(p), mv.neg(q)), a(q, p)
        r1.append(relative_residual(v + w1, v, w1))
        r2.append(relative_residual(v - w2, v, w2))
        r3.append(relative_residual(v + w3, v, w3))
    return Report("harmonic axioms", (
        sampled_check("alpha(p,q)+alpha(p,p-q)", r1, tol),
        sampled_check("alpha(p,q)-alpha(-p,-q)", r2, tol),
        sampled_check("alpha(p,q)+alpha(q,p)", r3, tol),
    ))


def check_complex_property(a, samples: Sequence | None = None, tol: float = 1e-10, *,
                           count: int = DEFAULT_COUNT, seed: int = DEFAULT_SEED) -> Report:
    """Mode-level form of ``(f*g)^bar = g^bar * f^bar``: conj(alpha(r,q)) = alpha(-r, q-r)."""
    samples = _pairs(a, samples, count, seed)
    res = []
    for r, q in samples:
        u, v = a(r, q).conjugate(), a(mv.neg(r), mv.sub(q, r))
        res.append(relative_residual(u - v, u, v))
    return Report("complex product", (sampled_check("conj(alpha(r,q))-alpha(-r,q-r)", res, tol),))


def validate(a, *, tol: float = 1e-9, count: int = 50, seed: int = DEFAULT_SEED) -> Report:
    """Raise ValidationError unless ``a`` passes the cocycle and unitality checks."""
    report = merge("cocycle validation",
                   check_cocycle_condition(a, tol=tol, count=count, seed=seed),
                   check_unitality(a, tol=tol, count=count, seed=seed))
    if not report.passed:
        raise ValidationError("not a unital 2-cocycle", report)
    return report


def project_pointwise(a) -> BlackBoxCocycle:
    """``alpha_H(p, q) = (alpha(p+q, q) - alpha(p+q, p)) / 2`` on evaluations."""

    def projected(p, q):
        s = mv.add(p, q)
        return (a(s, q) - a(s, p)) / 2

    label = f"H({a.label})" if getattr(a, "label", "") else "H(.)"
    return BlackBoxCocycle(a.m, projected, label)


def harmonic_projection(a):
    """Harmonic representative of the class of ``a``.

    Structured input returns the pure-theta StarCocycle; anything else is
    projected pointwise.
    """
    if isinstance(a, StarCocycle):
        return StarCocycle(a.theta, None, f"H({a.label})" if a.label else "")
    return project_pointwise(a)


def coboundary_part(a: StarCocycle) -> Cochain:
    """``d beta`` as a 2-cochain, built with the generic coboundary operator."""
    if not isinstance(a, StarCocycle):
        raise InputError("the coboundary part is only exposed for structured cocycles")
    return coboundary(Cochain(1, a.m, a.beta, "beta"))


def _numeric_sigma(a, p, q, h) -> np.ndarray:
    m = a.m
    out = np.empty((m, m), dtype=complex)
    for i in range(m):
        for j in range(m):
            out[i, j] = mixed_partial(
                lambda s, t: a(mv.add(p, mv.unit(m, i, s)), mv.add(q, mv.unit(m, j, t))), h)
    return out


def extract_sigma(a, p=None, q=None, h: Fraction = DEFAULT_STEP,
                  method: str = "auto") -> np.ndarray:
    """Mixed partials ``d^2 alpha / dz^i dz'^j`` at ``(p, q)``.

    ``method`` is ``"analytic"`` (structured only), ``"numeric"`` (Richardson
    central differences) or ``"auto"`` (analytic when possible).
    """
    p = mv.zeros(a.m) if p is None else mv.momentum(p)
    q = mv.zeros(a.m) if q is None else mv.momentum(q)
    mv.check_dimension(p, a.m, "p")
    mv.check_dimension(q, a.m, "q")
    if method == "auto":
        method = "analytic" if isinstance(a, StarCocycle) else "numeric"
    if method == "analytic":
        if not isinstance(a, StarCocycle):
            raise InputError("analytic sigma needs a structured cocycle")
        return np.array(a.theta) - a.beta.hessian(mv.sub(p, q))
    if method == "numeric":
        return _numeric_sigma(a, p, q, h)
    raise InputError(f"unknown method {method!r}")


def second_slot_hessian(a, p, q, h: Fraction = DEFAULT_STEP) -> np.ndarray:
    """``d^2 alpha / dz'^i dz'^j`` at ``(p, q)`` by finite differences."""
    m = a.m
    out = np.empty((m, m), dtype=complex)
    for i in range(m):
        for j in range(m):
            out[i, j] = mixed_partial(
                lambda s, t: a(p, mv.add(q, mv.add(mv.unit(m, i, s), mv.unit(m, j, t)))), h)
    return out


def check_sigma_structure(a, samples: Sequence | None = None, tol: float = 1e-6, *,
                          count: int = 50, seed: int = DEFAULT_SEED,
                          h: Fraction = DEFAULT_STEP) -> Report:
    """For a harmonic form: sigma constant, antisymmetric, second-slot Hessian zero.

    All derivatives are taken numerically so the check also applies to black
    boxes.
    """
    samples = _pairs(a, samples, count, seed)
    sigmas = [_numeric_sigma(a, p, q, h) for p, q in samples]
    ref = sigmas[0]
    spread = [float(np.max(np.abs(s - ref))) for s in sigmas]
    asym = [float(np.max(np.abs(s + s.T))) for s in sigmas]
    hess = [float(np.max(np.abs(second_slot_hessian(a, p, q, h)))) for p, q in samples]
    return Report("sigma structure", (
        sampled_check("sigma spread", spread, tol),
        sampled_check("sigma antisymmetry", asym, tol),
        sampled_check("second-slot hessian", hess, tol),
    ))


def classify(a, *, validate_input: bool = True, h: Fraction = DEFAULT_STEP,
             count: int = 50, seed: int = DEFAULT_SEED) -> ThetaClass:
    """The antisymmetric matrix of the harmonic representative of ``a``."""
    if isinstance(a, StarCocycle):
        return ThetaClass(np.array(a.theta))
    if validate_input:
        validate(a, count=count, seed=seed)
    sigma = _numeric_sigma(project_pointwise(a), mv.zeros(a.m), mv.zeros(a.m), h)
    return ThetaClass((sigma - sigma.T) / 2)


def coordinate_commutator(a, h: Fraction = DEFAULT_STEP) -> np.ndarray:
    """``[x^i, x^j]`` as ``M_ij - M_ji`` with ``M = d^2 alpha / dz dz'`` at (0, 0)."""
    zero = mv.zeros(a.m)
    M = extract_sigma(a, zero, zero, h=h)
    return M - M.T


def is_cohomologous(a1, a2, tol: float = 1e-8, **classify_kw) -> bool:
    check_same_dimension(a1, a2)
    return classify(a1, **classify_kw).distance(classify(a2, **classify_kw)) <= tol

"""Named products and seeded generators for test families."""
from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from . import momentum as mv
from .cocycle import BlackBoxCocycle, StarCocycle, classify
from .errors import InputError, ValidationError
from .modefield import ModeField
from .polynomial import MAX_DEGREE, Polynomial
from .report import Check, Report

PRESETS = ("moyal", "wick-voros", "random")


def _real_matrix(x, name: str) -> np.ndarray:
    arr = np.asarray(x)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InputError(f"{name} must be a square matrix, got shape {arr.shape}")
    if np.iscomplexobj(arr) and np.any(arr.imag != 0):
        raise ValidationError(f"{name} must be real")
    return arr.real.astype(float) if np.iscomplexobj(arr) else arr.astype(float)


def _require(residual: float, name: str, what: str):
    if residual != 0:
        raise ValidationError(f"{name} is not {what}",
                              Report(name, (Check(f"{name} {what}", residual, 0.0),)))


def zero_cocycle(m: int) -> StarCocycle:
    return StarCocycle(np.zeros((m, m)), None, "zero")


def harmonic(theta, label: str = "harmonic") -> StarCocycle:
    """``alpha(p, q) = p^T theta q`` for an antisymmetric (complex) ``theta``."""
    return StarCocycle(theta, None, label)


def moyal(theta_A) -> StarCocycle:
    """Groenewold-Moyal cocycle ``alpha(p, q) = i q^T theta_A p``.

    Stored in the ``p^T Theta q`` orientation, hence ``Theta = -i theta_A``.
    """
    theta_A = _real_matrix(theta_A, "theta_A")
    _require(float(np.max(np.abs(theta_A + theta_A.T))), "theta_A", "antisymmetric")
    return StarCocycle(-1j * theta_A + 0j, None, "moyal")


def wick_voros(theta_A, theta_S) -> StarCocycle:
    """Moyal plus the coboundary ``q^T theta_S (p - q)`` of ``beta = -p^T theta_S p / 2``."""
    theta_S = _real_matrix(theta_S, "theta_S")
    _require(float(np.max(np.abs(theta_S - theta_S.T))), "theta_S", "symmetric")
    base = moyal(theta_A)
    if theta_S.shape != base.theta.shape:
        raise InputError("theta_A and theta_S differ in shape")
    beta = Polynomial.quadratic_form(theta_S, -0.5)
    return StarCocycle(base.theta, beta, "wick-voros")


def coboundary_cocycle(beta: Polynomial) -> StarCocycle:
    return StarCocycle(np.zeros((beta.m, beta.m)), beta, "coboundary")


def symplectic_theta(m: int) -> np.ndarray:
    """Block matrix with ``theta[2k, 2k+1] = 1``; zero last row for odd ``m``."""
    theta = np.zeros((m, m))
    for k in range(0, m - 1, 2):
        theta[k, k + 1], theta[k + 1, k] = 1.0, -1.0
    return theta


def random_theta(m: int, seed: int, pure_imaginary: bool = True) -> np.ndarray:
    """Antisymmetric matrix with entries drawn from [-1, 1] (times i by default)."""
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.uniform(-1, 1, (m, m)), 1)
    if not pure_imaginary:
        upper = upper + 1j * np.triu(rng.uniform(-1, 1, (m, m)), 1)
    else:
        upper = 1j * upper
    return upper - upper.T


def random_beta(m: int, degree: int, seed: int, n_terms: int = 3,
                even: bool = False) -> Polynomial:
    """Sparse real polynomial, degrees 1..``degree``, coefficients in [-1, 1].

    ``even=True`` keeps only even-degree monomials, which makes the generated
    product complex (compatible with conjugation).
    """
    if not 0 <= degree <= MAX_DEGREE:
        raise InputError(f"beta degree must be in 0..{MAX_DEGREE}, got {degree}")
    monomials = [e for e in itertools.product(range(degree + 1), repeat=m)
                 if 1 <= sum(e) <= degree and (not even or sum(e) % 2 == 0)]
    if not monomials or n_terms <= 0:
        return Polynomial.zero(m)
    rng = np.random.default_rng(seed)
    picks = rng.choice(len(monomials), size=min(n_terms, len(monomials)), replace=False)
    return Polynomial(m, {monomials[k]: rng.uniform(-1, 1) for k in sorted(picks)})


def random_cocycle(m: int, theta_seed: int | None = 0, beta_degree: int = 2,
                   rng_seed: int = 0, *, n_terms: int = 3, even: bool = False) -> StarCocycle:
    """Seeded structured cocycle: pure-imaginary theta plus a random coboundary.

    ``theta_seed`` fixes theta (``None`` gives theta = 0, a pure coboundary) and
    ``rng_seed`` fixes beta independently, so equal theta seeds produce
    cohomologous cocycles.
    """
    theta = np.zeros((m, m)) if theta_seed is None else random_theta(m, theta_seed)
    beta = random_beta(m, beta_degree, rng_seed, n_terms, even)
    return StarCocycle(theta, beta, f"random(theta={theta_seed}, beta={rng_seed})")


def random_modefield(m: int, mode_count: int, freq_box=1, rng_seed: int = 0, *,
                     denominator: int = 8, zero_mode: bool = False) -> ModeField:
    """Seeded field with ``mode_count`` distinct modes in ``[-freq_box, freq_box]^m``.

    Frequencies are multiples of ``1/denominator``; coefficients are complex
    with real and imaginary parts in [-1, 1]. ``zero_mode=True`` forces the
    zero frequency to be one of the modes.
    """
    if not 1 <= mode_count <= 64:
        raise InputError(f"mode_count must be in 1..64, got {mode_count}")
    if not 1 <= denominator <= 8:
        raise InputError(f"denominator must be in 1..8, got {denominator}")
    rng = np.random.default_rng(rng_seed)
    freqs = [mv.zeros(m)] if zero_mode else []
    grid = (2 * int(Fraction(freq_box) * denominator) + 1) ** m
    if mode_count > grid:
        raise InputError(f"box holds only {grid} frequencies")
    seen = set(freqs)
    while len(freqs) < mode_count:
        p = mv.random_momentum(rng, m, freq_box, denominator)
        if p not in seen:
            seen.add(p)
            freqs.append(p)
    coeffs = rng.uniform(-1, 1, mode_count) + 1j * rng.uniform(-1, 1, mode_count)
    # keep coefficients away from the pruning threshold
    coeffs = np.where(np.abs(coeffs) < 1e-3, 1e-3, coeffs)
    return ModeField(m, zip(freqs, coeffs))


def preset(name: str, m: int = 2, seed: int = 0, beta_degree: int = 2) -> StarCocycle:
    """Cocycles addressable by name from the command line."""
    if m < 1:
        raise InputError(f"m must be >= 1, got {m}")
    if name == "moyal":
        return moyal(symplectic_theta(m))
    if name == "wick-voros":
        return wick_voros(symplectic_theta(m), np.eye(m))
    if name == "random":
        return random_cocycle(m, seed, beta_degree, seed)
    raise InputError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")


def cohomology_dimension(m: int, star: bool = False, seed: int = 0,
                         tol: float = 1e-6) -> int:
    """Real dimension of the span of classes of sampled cocycles.

    Random cocycles (complex theta for ``star=False``, pure imaginary for
    ``star=True``, each with a random coboundary) are wrapped as black boxes
    and classified through finite differences; the rank of the resulting real
    vectors is returned.
    """
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    if not pairs:
        return 0
    rows = []
    trials = 2 * len(pairs) + 2
    for k in range(trials):
        theta = random_theta(m, seed + k, pure_imaginary=star)
        beta = random_beta(m, 2, seed + 1000 + k, n_terms=2, even=True)
        structured = StarCocycle(theta, beta)
        box = BlackBoxCocycle(m, structured)
        M = classify(box, count=10, seed=seed + k).matrix
        upper = np.array([M[i, j] for i, j in pairs])
        rows.append(np.concatenate([upper.real, upper.imag]))
    sv = np.linalg.svd(np.array(rows), compute_uv=False)
    return int(np.sum(sv > tol * max(1.0, sv[0])))

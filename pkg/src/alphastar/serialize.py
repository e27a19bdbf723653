"""JSON encodings for cocycles, gauge cochains and mode fields.

Cocycle::

    {"m": 2,
     "theta": [[{"re": 0, "im": 0}, {"re": 0, "im": -1}], ...],
     "beta": {"2,0": {"re": -0.5, "im": 0}, ...}}

Multi-index ``"2,0"`` stands for ``p_1**2``. A gauge cochain is the same
object without ``theta``. Mode field::

    {"m": 2, "modes": [{"freq": ["1/2", "0/1"], "coeff": {"re": 1, "im": 0}}, ...]}
"""
from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from . import momentum as mv
from .cocycle import BlackBoxCocycle, StarCocycle
from .errors import InputError
from .modefield import ModeField
from .polynomial import Polynomial


def complex_to_json(c) -> dict:
    c = complex(c)
    return {"re": c.real, "im": c.imag}


def complex_from_json(obj) -> complex:
    if isinstance(obj, (int, float)) and not isinstance(obj, bool):
        return complex(obj)
    if not isinstance(obj, dict) or set(obj) - {"re", "im"}:
        raise InputError(f"expected {{'re': .., 'im': ..}}, got {obj!r}")
    try:
        re, im = float(obj.get("re", 0.0)), float(obj.get("im", 0.0))
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad complex number {obj!r}") from exc
    if not (math.isfinite(re) and math.isfinite(im)):
        raise InputError(f"non-finite complex number {obj!r}")
    return complex(re, im)


def _require_m(data) -> int:
    if not isinstance(data, dict):
        raise InputError("expected a JSON object")
    m = data.get("m")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise InputError(f"'m' must be a positive integer, got {m!r}")
    return m


def beta_to_json(beta: Polynomial) -> dict:
    return {",".join(map(str, k)): complex_to_json(c) for k, c in beta.coeffs.items()}


def beta_from_json(obj, m: int) -> Polynomial:
    if obj is None:
        return Polynomial.zero(m)
    if not isinstance(obj, dict):
        raise InputError("'beta' must be an object keyed by multi-index")
    coeffs = {}
    for key, value in obj.items():
        try:
            exps = tuple(int(x) for x in key.split(","))
        except ValueError as exc:
            raise InputError(f"bad multi-index {key!r}") from exc
        if len(exps) != m or any(e < 0 for e in exps):
            raise InputError(f"multi-index {key!r} does not fit m={m}")
        coeffs[exps] = complex_from_json(value)
    return Polynomial(m, coeffs)


def _theta_from_json(obj, m: int) -> np.ndarray:
    if not isinstance(obj, list) or len(obj) != m or any(
            not isinstance(row, list) or len(row) != m for row in obj):
        raise InputError(f"'theta' must be an {m}x{m} nested list")
    return np.array([[complex_from_json(x) for x in row] for row in obj], dtype=complex)


def cocycle_to_json(a: StarCocycle) -> dict:
    return {"m": a.m,
            "theta": [[complex_to_json(x) for x in row] for row in a.theta],
            "beta": beta_to_json(a.beta)}


def cocycle_from_json(data, label: str = "") -> StarCocycle:
    """Parse and validate; raises InputError (schema) or ValidationError (math)."""
    m = _require_m(data)
    theta = _theta_from_json(data.get("theta"), m)
    beta = beta_from_json(data.get("beta"), m)
    return StarCocycle(theta, beta, label)


def unchecked_cocycle_from_json(data) -> BlackBoxCocycle:
    """Same formula as a StarCocycle without the antisymmetry/constant-term checks.

    Lets the command line report residuals for input that failed validation.
    """
    m = _require_m(data)
    theta = _theta_from_json(data.get("theta"), m)
    beta = beta_from_json(data.get("beta"), m)

    def alpha(p, q):
        pf, qf = mv.to_float(p), mv.to_float(q)
        return complex(pf @ theta @ qf) + beta(q) - beta(p) + beta(mv.sub(p, q))

    return BlackBoxCocycle(m, alpha, "unchecked")


def gauge_from_json(data) -> Polynomial:
    """Accepts ``{"m": .., "beta": {..}}`` (a cocycle document also works)."""
    m = _require_m(data)
    return beta_from_json(data.get("beta"), m)


def gauge_to_json(beta: Polynomial) -> dict:
    return {"m": beta.m, "beta": beta_to_json(beta)}


def field_to_json(f: ModeField) -> dict:
    return {"m": f.m,
            "modes": [{"freq": [mv.format_rational(x) for x in k], "coeff": complex_to_json(c)}
                      for k, c in f]}


def field_from_json(data) -> ModeField:
    m = _require_m(data)
    modes = data.get("modes")
    if not isinstance(modes, list):
        raise InputError("'modes' must be a list")
    items = []
    for entry in modes:
        if not isinstance(entry, dict) or "freq" not in entry or "coeff" not in entry:
            raise InputError(f"bad mode entry {entry!r}")
        freq = entry["freq"]
        if not isinstance(freq, list) or len(freq) != m:
            raise InputError(f"frequency {freq!r} does not have {m} components")
        if any(isinstance(x, float) for x in freq):
            raise InputError(f"frequencies must be exact (strings or ints), got {freq!r}")
        items.append((mv.momentum(freq), complex_from_json(entry["coeff"])))
    return ModeField(m, items)


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def load_json(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from exc

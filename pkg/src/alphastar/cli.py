"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 validation or equivalence failure,
4 numeric range error. Every report is JSON on standard output.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from . import catalog
from .cocycle import (check_cocycle_condition, check_harmonic, check_unitality, classify,
                      coordinate_commutator)
from .equivalence import check_quantum_equivalence
from .errors import InputError, RangeError, ValidationError
from .modefield import star
from .report import merge
from .serialize import (cocycle_from_json, cocycle_to_json, complex_to_json, dumps,
                        field_from_json, field_to_json, gauge_from_json, load_json,
                        unchecked_cocycle_from_json)

EXIT_OK, EXIT_INPUT, EXIT_FAIL, EXIT_RANGE = 0, 2, 3, 4


def _matrix(mat) -> list:
    return [[complex_to_json(x) for x in row] for row in np.asarray(mat)]


def _emit(obj: dict, out=None) -> None:
    text = dumps(obj)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_cocycle(path, samples: int = 50, tol: float = 1e-9, seed: int = 0):
    data = load_json(path)
    try:
        return cocycle_from_json(data, label=str(path))
    except ValidationError as exc:
        # attach the residuals of the formula as written
        raw = unchecked_cocycle_from_json(data)
        residuals = merge(f"{path} (as written)",
                          check_cocycle_condition(raw, tol=tol, count=samples, seed=seed),
                          check_unitality(raw, tol=tol, count=samples, seed=seed))
        raise ValidationError(str(exc), merge(str(exc), exc.report, residuals)
                              if exc.report else residuals) from exc


def cmd_classify(args) -> int:
    a = _load_cocycle(args.cocycle)
    cls = classify(a)
    m = a.m
    _emit({
        "m": m,
        "theta": _matrix(cls.matrix),
        "theta_orientation": "alpha_H(p,q) = p^i theta_ij q^j",
        "real_theta": _matrix(cls.real_theta),
        "real_theta_orientation": "alpha_H(p,q) = i p^i real_theta_ij q^j",
        "moyal_theta_A": _matrix(cls.moyal_theta),
        "moyal_orientation": "alpha_GM(p,q) = i q^mu theta_A_mu_nu p^nu",
        "pure_imaginary": cls.is_pure_imaginary(),
        "commutator": _matrix(coordinate_commutator(a)),
        "dim_H2_alpha": catalog.cohomology_dimension(m, star=False, seed=args.seed),
        "dim_H2_alpha_star": catalog.cohomology_dimension(m, star=True, seed=args.seed),
    })
    return EXIT_OK


def cmd_verify(args) -> int:
    a = _load_cocycle(args.cocycle, args.samples, args.tol, args.seed)
    kw = dict(tol=args.tol, count=args.samples, seed=args.seed)
    report = merge(f"verify {args.cocycle}", check_cocycle_condition(a, **kw),
                   check_unitality(a, **kw), check_harmonic(a, **kw))
    _emit(report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_star(args) -> int:
    a = _load_cocycle(args.cocycle)
    f = field_from_json(load_json(args.f))
    g = field_from_json(load_json(args.g))
    _emit(field_to_json(star(a, f, g)), args.out)
    return EXIT_OK


def cmd_equivalence(args) -> int:
    if not 1 <= len(args.fields) <= 4:
        raise InputError(f"need 1 to 4 field files, got {len(args.fields)}")
    a1 = _load_cocycle(args.cocycle1)
    a2 = _load_cocycle(args.cocycle2)
    beta = gauge_from_json(load_json(args.beta))
    fields = [field_from_json(load_json(p)) for p in args.fields]
    report = check_quantum_equivalence(a1, a2, beta, fields, tol=args.tol,
                                       count=args.samples, seed=args.seed)
    _emit(report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_preset(args) -> int:
    if args.name == "field":
        f = catalog.random_modefield(args.m, args.modes, args.box, args.seed)
        _emit(field_to_json(f), args.out)
    else:
        a = catalog.preset(args.name, args.m, args.seed, args.beta_degree)
        _emit(cocycle_to_json(a), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alphastar",
        description="Translation-invariant star products: verify, classify, multiply.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, samples=True):
        p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
        if samples:
            p.add_argument("--samples", type=int, default=100, help="number of sample points")

    p = sub.add_parser("classify", help="cohomology class, commutator and H^2 dimensions")
    p.add_argument("cocycle")
    common(p, samples=False)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="cocycle, unitality and harmonic checks")
    p.add_argument("cocycle")
    p.add_argument("--tol", type=float, default=1e-10)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("star", help="star product of two mode fields")
    p.add_argument("cocycle")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_star)

    p = sub.add_parser("equivalence", help="integral identity for a gauge-related pair")
    p.add_argument("cocycle1", help="cocycle containing d beta")
    p.add_argument("cocycle2")
    p.add_argument("beta", help="gauge cochain JSON ({'m', 'beta'}; a cocycle file also works)")
    p.add_argument("fields", nargs="+")
    p.add_argument("--tol", type=float, default=1e-9)
    common(p)
    p.set_defaults(func=cmd_equivalence)

    p = sub.add_parser("preset", help="emit a named cocycle (or a random field) as JSON")
    p.add_argument("name", choices=list(catalog.PRESETS) + ["field"])
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--beta-degree", type=int, default=2)
    p.add_argument("--modes", type=int, default=4, help="mode count for 'field'")
    p.add_argument("--box", default="1", help="frequency box for 'field'")
    p.add_argument("--out")
    p.set_defaults(func=cmd_preset)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"alphastar: validation failed: {exc}", file=sys.stderr)
        payload = {"error": str(exc)}
        if exc.report is not None:
            payload["report"] = exc.report.to_dict()
        _emit(payload)
        return EXIT_FAIL
    except RangeError as exc:
        print(f"alphastar: numeric range: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except InputError as exc:
        print(f"alphastar: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

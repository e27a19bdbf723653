from fractions import Fraction

import numpy as np
import pytest

from alphastar import (ModeField, Polynomial, RangeError, ValidationError,
                       check_quantum_equivalence, check_trace_property, gauge_transform,
                       integral, moyal, star, star_chain, wick_voros)
from alphastar.catalog import random_cocycle, random_modefield, symplectic_theta
from alphastar.equivalence import check_gauge_relation, nonequivalence_witness

J = symplectic_theta(2)
S = np.array([[1.0, 0.25], [0.25, 2.0]])
BETA = Polynomial.quadratic_form(S, -0.5)


def fields(n, m=2, seed=0):
    # coarse grid so that frequency sums cancel and integrals are non-trivial
    return [random_modefield(m, 5, Fraction(1, 2), seed + k, denominator=2, zero_mode=k == 0)
            for k in range(n)]


def test_gauge_transform_keeps_support_and_zero_mode():
    f = random_modefield(2, 5, 1, 3, zero_mode=True)
    g = gauge_transform(f, BETA)
    assert set(g.modes) == set(f.modes)
    assert integral(g) == integral(f)
    with pytest.raises(ValidationError):
        gauge_transform(f, Polynomial(2, {(0, 0): 1.0}))
    with pytest.raises(RangeError):
        gauge_transform(ModeField.plane_wave((40, 0)), Polynomial(2, {(2, 0): 1.0}))


def test_gauge_map_intertwines_products():
    wv, my = wick_voros(J, S), moyal(J)
    f, g = fields(2)
    lhs = gauge_transform(star(wv, f, g), BETA)
    rhs = star(my, gauge_transform(f, BETA), gauge_transform(g, BETA))
    assert lhs.distance(rhs) < 1e-12


def test_wick_voros_moyal_equivalence_all_n():
    report = check_quantum_equivalence(wick_voros(J, S), moyal(J), BETA, fields(4))
    assert report.passed, str(report)
    assert [c.name for c in report.checks][1:] == ["n=1", "n=2", "n=3", "n=4"]
    assert all(abs(complex(*c.detail["plain_side"])) > 1e-3 for c in report.checks[1:])


def test_primes_on_the_wrong_side_fail():
    # gauged fields multiplied with the product that contains d beta
    wv, my = wick_voros(J, S), moyal(J)
    q, p = (Fraction(1, 2), Fraction(1, 4)), (Fraction(-1, 4), Fraction(3, 4))
    fs = [ModeField.plane_wave(q), ModeField.plane_wave(p),
          ModeField.plane_wave(tuple(-x - y for x, y in zip(p, q)))]
    primed = [gauge_transform(f, BETA) for f in fs]
    wrong = integral(star_chain(wv, primed)) - integral(star_chain(my, fs))
    right = integral(star_chain(my, primed)) - integral(star_chain(wv, fs))
    assert abs(wrong) > 1e-3
    assert abs(right) < 1e-12


def test_precondition_failure_is_reported():
    report = check_quantum_equivalence(moyal(J), wick_voros(J, S), BETA, fields(2))
    assert not report.passed
    assert report.title.endswith("(precondition failed)")
    assert len(report.checks) == 1
    assert not check_gauge_relation(moyal(J), moyal(2 * J), Polynomial.zero(2)).passed


def test_trace_property_cycles():
    a = random_cocycle(2, 2, 2, 7)
    report = check_trace_property(a, fields(4, seed=9), rotations=4)
    assert report.passed, str(report)


def test_nonequivalence_witness_found_quickly():
    found = nonequivalence_witness(moyal(J), moyal(2 * J), Polynomial.zero(2), trials=1000)
    assert found is not None
    _, residual, trial = found
    assert residual > 1e-6 and trial < 1000


def test_no_witness_for_equivalent_pair():
    assert nonequivalence_witness(wick_voros(J, S), moyal(J), BETA, trials=50,
                                  freq_box=1) is None

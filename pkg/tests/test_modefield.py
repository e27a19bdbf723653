import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from alphastar import (InputError, ModeField, Polynomial, RangeError, StarCocycle, derivative,
                       integral, moyal, star, star_chain, star_chain_right, translate,
                       wick_voros)
from alphastar.catalog import random_cocycle, random_modefield, symplectic_theta
from alphastar.modefield import associativity_defect, associativity_witness, commutativity_witness
from oracles import double_sum_star
from strategies import mode_fields, star_cocycles

J = symplectic_theta(2)


def test_construction_merges_and_prunes():
    f = ModeField(1, [((1,), 1.0), (("1/1",), 2.0), ((2,), 1e-16)])
    assert dict(f.modes) == {(Fraction(1),): 3.0}
    assert len(f - f) == 0
    with pytest.raises(InputError):
        ModeField(2, [((1,), 1.0)])
    with pytest.raises(InputError):
        f + ModeField.unit(2)


def test_moyal_plane_wave_frozen():
    # e_{(1,0)} * e_{(0,1)} under theta_12 = 1 picks up exp(i)
    out = star(moyal(J), ModeField.plane_wave((1, 0)), ModeField.plane_wave((0, 1)))
    assert dict(out.modes) == {(1, 1): 0.5403023058681398 + 0.8414709848078965j}


@given(star_cocycles(m=2, max_degree=2), mode_fields(2), mode_fields(2))
def test_star_matches_double_sum(a, f, g):
    ref = double_sum_star(a, list(f), list(g))
    out = star(a, f, g)
    assert out.distance(ModeField(2, ref)) < 1e-12 * max(1, out.max_abs())


@given(star_cocycles(m=2, max_degree=2), mode_fields(2))
def test_unit_is_two_sided(a, f):
    one = ModeField.unit(2)
    assert star(a, one, f).distance(f) < 1e-14
    assert star(a, f, one).distance(f) < 1e-14


def test_conj_and_evaluate():
    f = ModeField(1, {(Fraction(1, 2),): 1 + 2j, (0,): 0.5})
    x = np.array([0.3])
    assert f.conj().evaluate(x) == pytest.approx(f.evaluate(x).conjugate())
    assert f.evaluate([0.0]) == pytest.approx(1.5 + 2j)


def test_derivative_axis_is_zero_based():
    f = ModeField.plane_wave((Fraction(1, 2), 3), 2.0)
    assert derivative(f, 0).coefficient((Fraction(1, 2), 3)) == 1j
    assert derivative(f, 1).coefficient((Fraction(1, 2), 3)) == 6j
    with pytest.raises(InputError):
        derivative(f, 2)


def test_integral_and_translate():
    f = ModeField(1, {(0,): 2.0, (1,): 1.0})
    assert integral(f) == 2.0
    t = translate(f, [math.pi])
    assert t.coefficient((1,)) == pytest.approx(-1)
    assert integral(t) == 2.0


def test_chains_agree_for_cocycles():
    a = random_cocycle(2, 1, 2, 1)
    fields = [random_modefield(2, 3, Fraction(1, 2), s) for s in range(4)]
    left, right = star_chain(a, fields), star_chain_right(a, fields)
    assert left.distance(right) < 1e-12 * max(1, left.max_abs())
    with pytest.raises(InputError):
        star_chain(a, [])


def test_overflow_is_a_range_error():
    a = StarCocycle(np.zeros((1, 1)), Polynomial(1, {(2,): 1.0}))
    big = ModeField.plane_wave((30,))
    with pytest.raises(RangeError, match="exceeds"):
        star(a, big, big)


def test_associativity_witness_for_non_cocycle():
    class Bad:
        m = 1
        arity = 2

        def __call__(self, p, q):
            return 1j * float(q[0] * (p[0] - q[0])) ** 2

    triples = [((Fraction(1),), (Fraction(1, 2),), (Fraction(-1, 4),))]
    f, g, h, defect = associativity_witness(Bad(), triples)
    assert defect > 1e-6
    assert associativity_defect(Bad(), f, g, h) == defect


def test_commutativity_witness():
    assert commutativity_witness(random_cocycle(3, None, 3, 2)) is None
    f, g, gap = commutativity_witness(moyal(J))
    assert gap > 1e-9
    # a tiny theta still shows up at the largest lengths scanned
    assert commutativity_witness(moyal(1e-6 * J)) is not None


@given(st.integers(0, 50))
def test_wick_voros_star_is_complex(seed):
    a = wick_voros(J, np.eye(2))
    f = random_modefield(2, 3, Fraction(1, 2), seed)
    g = random_modefield(2, 3, Fraction(1, 2), seed + 100)
    lhs = star(a, f, g).conj()
    rhs = star(a, g.conj(), f.conj())
    assert lhs.distance(rhs) < 1e-12 * max(1, lhs.max_abs())

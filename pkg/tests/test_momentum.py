from fractions import Fraction

import pytest
from hypothesis import given

from alphastar import InputError
from alphastar import momentum as mv
from strategies import momenta


def test_to_rational_accepts_exact_forms():
    assert mv.to_rational(3) == 3
    assert mv.to_rational("3/4") == Fraction(3, 4)
    assert mv.to_rational(0.25) == Fraction(1, 4)
    assert mv.format_rational(Fraction(2)) == "2/1"


@pytest.mark.parametrize("bad", [float("nan"), float("inf"), "x/2", True])
def test_to_rational_rejects(bad):
    with pytest.raises(InputError):
        mv.to_rational(bad)


def test_dimension_check():
    with pytest.raises(InputError):
        mv.check_dimension(mv.momentum([1, 2]), 3)


def test_sample_tuples_is_deterministic():
    a = mv.sample_tuples(3, 2, 10, seed=5)
    assert a == mv.sample_tuples(3, 2, 10, seed=5)
    assert a != mv.sample_tuples(3, 2, 10, seed=6)
    assert all(abs(x) <= 2 and (x * 8).denominator == 1 for t in a for p in t for x in p)


@given(momenta(3), momenta(3))
def test_vector_arithmetic_is_exact(p, q):
    assert mv.sub(mv.add(p, q), q) == p
    assert mv.add(p, mv.neg(p)) == mv.zeros(3)
    assert mv.is_zero(mv.scale(p, 0))

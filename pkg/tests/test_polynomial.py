from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from hypothesis import given

from alphastar import InputError, Polynomial
from strategies import momenta, polynomials


def test_quadratic_form_matches_matrix_product():
    S = np.array([[2.0, 0.5], [0.5, -1.0]])
    poly = Polynomial.quadratic_form(S, -0.5)
    p = (Fraction(1, 2), Fraction(-3, 4))
    v = np.array([0.5, -0.75])
    assert poly(p) == pytest.approx(-0.5 * v @ S @ v, abs=1e-15)
    assert poly.degree == 2


def test_constructor_validation():
    with pytest.raises(InputError):
        Polynomial(2, {(1,): 1.0})
    with pytest.raises(InputError):
        Polynomial(1, {(-1,): 1.0})
    assert Polynomial(2, {(1, 0): 0.0}).is_zero()


@given(polynomials(2, real=False), momenta(2))
def test_evaluation_matches_sympy(poly, p):
    x, y = sp.symbols("x y")
    expr = sum((complex(c) * x ** e[0] * y ** e[1] for e, c in poly.coeffs.items()), sp.Integer(0))
    ref = complex(sp.N(expr.subs({x: sp.Rational(p[0]), y: sp.Rational(p[1])})))
    assert abs(poly(p) - ref) < 1e-12


@given(polynomials(2), polynomials(2), momenta(2))
def test_ring_operations_pointwise(a, b, p):
    assert abs((a + b)(p) - a(p) - b(p)) < 1e-12
    assert abs((a - b)(p) - a(p) + b(p)) < 1e-12
    assert abs((2 * a)(p) - 2 * a(p)) < 1e-12


def test_hessian_of_cubic():
    # beta = x^2 y ; hessian = [[2y, 2x], [2x, 0]]
    poly = Polynomial(2, {(2, 1): 1.0})
    H = poly.hessian((Fraction(3), Fraction(5)))
    assert np.array_equal(H, np.array([[10, 6], [6, 0]], dtype=complex))

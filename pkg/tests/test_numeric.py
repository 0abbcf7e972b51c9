from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bigjacobi.errors import ScalarKindError
from bigjacobi.numeric import Polynomial, as_scalar, format_scalar, max_abs_coeff, pochhammer

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
polys = st.lists(rationals, max_size=6).map(Polynomial)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Polynomial.zero()


@settings(max_examples=60, deadline=None)
@given(polys, rationals)
def test_synthetic_division(p, a):
    quot, rem = p.divmod_linear(a)
    assert rem == p(a)
    assert quot * Polynomial([-a, 1]) + rem == p


@settings(max_examples=40, deadline=None)
@given(polys, rationals)
def test_square_composition_and_reflection(p, x):
    assert p.compose_square()(x) == p(x * x)
    assert p.reflect()(x) == p(-x)
    even, odd = p.even_odd_parts()
    assert even.compose_square() + Polynomial.x() * odd.compose_square() == p


def test_trailing_zeros_stripped():
    p = Polynomial([1, 2, 0, 0])
    assert p.degree == 1
    assert Polynomial([0, 0]).degree == -1
    assert Polynomial.zero().is_zero()


def test_string_form():
    p = Polynomial([F(-9, 16), F(-1, 4), 1])
    assert str(p) == "x^2 - 1/4*x - 9/16"
    assert str(Polynomial([F(-1, 4), 1])) == "x - 1/4"
    assert str(Polynomial.zero()) == "0"


def test_kind_mixing_rejected():
    p = Polynomial([1, 2])
    with pytest.raises(ScalarKindError):
        p + Polynomial([1.0, 2.0])
    with pytest.raises(ScalarKindError):
        p.scale(0.5)
    with pytest.raises(ScalarKindError):
        Polynomial([F(1), 0.5])


def test_float_evaluation_on_arrays():
    p = Polynomial([1.0, -2.0, 1.0])
    xs = np.array([0.0, 1.0, 3.0])
    assert np.allclose(p(xs), [1.0, 0.0, 4.0])


def test_scalar_helpers():
    assert as_scalar("3/4") == F(3, 4)
    assert as_scalar(2) == F(2)
    assert isinstance(as_scalar(0.5), float)
    assert format_scalar(F(-5, 3)) == "-5/3"
    assert pochhammer(F(1, 2), 3) == F(15, 8)
    assert max_abs_coeff(Polynomial([3, -7, 2])) == 7


def test_power_and_derivative():
    p = Polynomial([-1, 1]) ** 3
    assert p.coeffs == (-1, 3, -3, 1)
    assert p.derivative() == Polynomial([3, -6, 3])
    with pytest.raises(ValueError):
        p ** -1

from fractions import Fraction as F

import pytest
from scipy.special import hyp2f1

from bigjacobi.bigm1 import (
    WeightSpec,
    explicit_form,
    formula_A,
    formula_C,
    formula_u,
    generate,
    hyp_2f1_terminating,
    kappa,
    limit_AC,
    little_weight,
    polys_from_recurrence,
    recurrence_coeffs,
    weight,
    weight_formula,
)
from bigjacobi.dunkl import FamilyParams, pn_via_phi
from bigjacobi.errors import DomainError, ParameterError, PoleError
from bigjacobi.numeric import Polynomial


def test_low_order_polynomials(base):
    family = generate(base, 2)
    assert family[1] == Polynomial([F(-1, 4), 1])
    assert family[2] == Polynomial([F(-9, 16), F(-1, 4), 1])


def test_recurrence_data_frozen(base):
    rec = recurrence_coeffs(base, 3)
    assert rec.b[:3] == (F(1, 4), 0, 0)
    assert rec.u[1:4] == (F(9, 16), F(1, 16), F(9, 16))


def test_C0_vanishes_and_A0(base):
    assert limit_AC(base, 0) == (F(3, 4), 0)


def test_products_reproduce_u(params):
    a, b, c = params.as_tuple()
    for n in range(1, 15):
        assert formula_A(a, b, c, n - 1) * formula_C(a, b, c, n) == formula_u(a, b, c, n)


def test_u_positive(params):
    assert all(u > 0 for u in recurrence_coeffs(params, 30).u[1:])


def test_triple_equality(params):
    family = generate(params, 20)
    for n in range(21):
        assert explicit_form(params, n) == family[n]
        assert pn_via_phi(params, n) == family[n]


def test_explicit_form_is_monic(params):
    for n in range(8):
        assert explicit_form(params, n).is_monic()
        assert kappa(params, n) != 0


@pytest.mark.parametrize("m, b, c, z", [(0, 1.5, 0.7, 0.3), (3, 1.5, 0.7, 0.3), (5, -2.25, 3.5, -1.2), (4, 0.5, 0.5, 0.9)])
def test_gauss_series_against_scipy(m, b, c, z):
    assert hyp_2f1_terminating(m, b, c, z) == pytest.approx(hyp2f1(-m, b, c, z), rel=1e-12)


def test_gauss_series_exact_and_symbolic():
    assert hyp_2f1_terminating(2, F(1), F(1), F(1, 2)) == F(1, 4)   # (1 - z)^2
    z = Polynomial([0, 1])
    assert hyp_2f1_terminating(2, F(1), F(1), z) == Polynomial([1, -2, 1])


def test_gauss_series_pole():
    with pytest.raises(PoleError):
        hyp_2f1_terminating(3, F(1), F(-1), F(1, 2))
    with pytest.raises(ValueError):
        hyp_2f1_terminating(-1, F(1), F(1), F(1, 2))


def test_polys_from_recurrence_float(base):
    rec = recurrence_coeffs(base.to_float(), 3)
    polys = polys_from_recurrence(rec.u, rec.b, 3, kind="float")
    assert polys[2].coeffs == pytest.approx((-9 / 16, -1 / 4, 1.0))


def test_weight_support_branches():
    small = WeightSpec.of(FamilyParams(0, 0, F(1, 2)))
    large = WeightSpec.of(FamilyParams(0, 0, 3))
    assert small.branch == "c<1" and small.support == ((-1.0, -0.5), (0.5, 1.0))
    assert large.branch == "c>1" and large.support == ((-3.0, -1.0), (1.0, 3.0))
    assert small.contains(0.7) and not small.contains(0.2) and not small.contains(1.0)


@pytest.mark.parametrize("x", [-0.9, -0.6, 0.55, 0.95])
def test_weight_positive_inside(x):
    assert weight(FamilyParams(F(1, 2), F(3, 2), F(1, 2)), x) > 0
    assert weight(FamilyParams(2, 1, 3), 3 * x) > 0


def test_weight_value_frozen():
    # (alpha, beta, c) = (1, 1, 1/2): w(x) = theta(x) (x+1)(x-1/2)
    assert weight(FamilyParams(1, 1, F(1, 2)), 0.75) == pytest.approx(1.75 * 0.25)
    assert weight(FamilyParams(1, 1, F(1, 2)), -0.75) == pytest.approx(0.25 * 1.25)


def test_weight_outside_support(base):
    with pytest.raises(DomainError):
        weight(base, 0.1)
    with pytest.raises(DomainError):
        weight(base, 1.5)


def test_c_zero_degeneration():
    a, b = F(1, 2), F(3, 4)
    assert all(formula_u(a, b, 0, n) > 0 for n in range(1, 25))
    for x in (-0.8, -0.3, 0.2, 0.9):
        assert weight_formula(a, b, 0, x) == pytest.approx(little_weight(a, b, x), rel=1e-14)


def test_c_one_degeneration():
    a, b = F(1, 2), F(3, 4)
    assert all(formula_u(a, b, 1, 2 * n) == 0 for n in range(1, 10))
    assert all(formula_u(a, b, 1, 2 * n + 1) > 0 for n in range(10))
    with pytest.raises(ParameterError):
        FamilyParams(a, b, 1)

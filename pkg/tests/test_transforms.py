from fractions import Fraction as F

import pytest

from bigjacobi.bigm1 import generate
from bigjacobi.dunkl import FamilyParams
from bigjacobi.errors import InconsistencyError, ZeroAtNodeError
from bigjacobi.numeric import Polynomial
from bigjacobi.transforms import (
    MonicOPS,
    christoffel,
    derived_recurrence_residuals,
    functional_moments,
    geronimus_coefficients,
    geronimus_link,
    geronimus_link_details,
    geronimus_reconstruct,
    interleave,
    jacobi_A,
    jacobi_B,
    jacobi_interleaved,
    jacobi_shifted_companion,
    jacobi_shifted_family,
    moments_interleaved,
    recurrence_from_polys,
)

XI, ETA, C = F(1, 3), F(2, 5), F(1, 2)


@pytest.fixture(scope="module")
def jacobi():
    return jacobi_interleaved(XI, ETA, C, 24)


def test_recurrence_read_back(base):
    polys = generate(base, 6)
    u, b = recurrence_from_polys(polys)
    assert u[1:3] == [F(9, 16), F(1, 16)]
    assert b[0] == F(1, 4)


def test_non_monic_family_rejected():
    with pytest.raises(InconsistencyError):
        recurrence_from_polys([Polynomial([1]), Polynomial([0, 2])])


def test_christoffel_gives_companion_and_closed_form_A():
    P = jacobi_shifted_family(XI, ETA, C, 10)
    Q, A = christoffel(P, 1)
    assert Q.polys == jacobi_shifted_companion(XI, ETA, C, 9).polys
    assert A == [jacobi_A(XI, ETA, C, n) for n in range(10)]


def test_geronimus_coefficients_closed_form():
    P = jacobi_shifted_family(XI, ETA, C, 10)
    _, A = christoffel(P, 1)
    B = geronimus_coefficients(P, A)
    assert B[:10] == [jacobi_B(XI, ETA, C, n) for n in range(10)]


@pytest.mark.parametrize("nu2", [F(1), F(3, 2), F(-2)])
def test_round_trip_exact(nu2):
    P = jacobi_shifted_family(XI, ETA, C, 10)
    Q, A = christoffel(P, nu2)
    back = geronimus_reconstruct(Q, geronimus_coefficients(P, A), nu2)
    assert back.polys == P.polys[: back.n_max + 1]


def test_christoffel_at_a_zero():
    P = MonicOPS.from_polys(generate(FamilyParams(0, 0, F(1, 2)), 4))
    with pytest.raises(ZeroAtNodeError):
        christoffel(P, F(1, 4))   # P_1 vanishes at b_0 = 1/4


def test_interleaved_recurrence(jacobi):
    R, P, Q = jacobi
    assert len(R.R) >= 25
    for n in range(25):
        assert R.recurrence_residual(n).is_zero()
    assert all(r == 0 for r in derived_recurrence_residuals(R, P, Q))


def test_v_negative_on_lower_branch(jacobi):
    R, _, _ = jacobi
    assert all(v < 0 for v in R.v[1:])


def test_v_positive_for_c_above_one():
    R, _, _ = jacobi_interleaved(XI, ETA, F(3), 10)
    assert all(v > 0 for v in R.v[1:])


def test_interleaved_moments(jacobi):
    R, P, Q = jacobi
    c_moments = functional_moments(P.u, P.b, 6)
    r, tc = moments_interleaved(R, c_moments)
    v = [0] + list(R.v[1:])
    diag = [(-1) ** n * R.nu for n in range(len(R.v))]
    assert functional_moments(v, diag, 12) == r[:12]
    assert functional_moments(Q.u, Q.b, 5) == tc[:5]


def test_symmetric_case_nu_zero():
    P = jacobi_shifted_family(XI, ETA, C, 6)
    Q, _ = christoffel(P, 0)
    R = interleave(P, Q, 0)
    for n in range(len(R.R) - 1):
        assert R.recurrence_residual(n).is_zero()
    # odd polynomials, even polynomials: R_n(-x) = (-1)^n R_n(x)
    for n, r in enumerate(R.R):
        assert r.reflect() == r.scale((-1) ** n)


@pytest.mark.parametrize("params, mu", [
    (FamilyParams(0, 0, F(1, 2)), F(-1, 2)),
    (FamilyParams(F(1, 2), F(3, 2), F(1, 4)), F(-1, 4)),
    (FamilyParams(2, 1, 3), F(-3)),
])
def test_weight_link_recovers_minus_c(params, mu):
    G, found = geronimus_link(params, 20)
    assert found == mu
    assert G[0] == 0
    details = geronimus_link_details(params, 10)
    assert set(details.mu_values) == {mu}


def _interpolate(xs, ys):
    """Exact Lagrange interpolation through (xs, ys)."""
    out = Polynomial.zero()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = Polynomial.constant(yi)
        for j, xj in enumerate(xs):
            if j != i:
                term = term * Polynomial([-xj, 1]) / (xi - xj)
        out = out + term
    return out


@pytest.mark.parametrize("n", range(1, 6))
def test_even_moments_as_polynomials_in_nu(n):
    # x R_k = R_{k+1} + (-1)^k nu R_k + v_k R_{k-1} with v fixed and nu varying
    v = [0, F(-2, 3), F(5, 7), F(-1, 4), F(3, 2), F(-4, 5), F(2, 9), F(1, 3), F(-7, 6), F(1, 5), F(6, 11)]
    nus = [F(k, 3) for k in range(-n, n + 2)]
    values = []
    for nu in nus:
        diag = [(-1) ** k * nu for k in range(len(v))]
        values.append(functional_moments(v, diag, 2 * n + 1)[2 * n])
    r = _interpolate(nus, values)
    assert r.degree == 2 * n and r.is_monic()
    assert all(r.coeff(k) == 0 for k in range(1, 2 * n, 2))
    assert r.coeff(2 * n - 2) == n * v[1]
    if n >= 2:
        assert r.coeff(2 * n - 4) == F(n * (n - 1), 2) * v[1] * (v[1] + v[2])

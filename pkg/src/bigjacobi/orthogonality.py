"""
Inner products on the two-interval support.

Every integral over the support is folded onto its positive half and then
rewritten in u = x^2.  With

    g(u) = |1 - u|^((alpha-1)/2) |u - c^2|^((beta-1)/2)
    s(x) = sign(1 - c) (x + 1)(x - c)

the weight is w(x) = theta(x) s(x) g(x^2) on both c-branches, so

    int_Gamma F w dx = int g(u) [s(x) F(x) - s(-x) F(-x)] / (2x) du,   x = sqrt(u).

The bracket divided by 2x is a polynomial in u whenever F is a polynomial,
and the map t = (u - c^2) / (1 - c^2) sends g(u) du to a multiple of the
Jacobi weight t^((beta-1)/2) (1-t)^((alpha-1)/2) dt on [0, 1].  Gauss-Jacobi
quadrature in t is therefore exact up to rounding, endpoint singularities
included.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .bigm1 import beta_function, recurrence_coeffs
from .dunkl import FamilyParams
from .errors import ConvergenceError
from .numeric import Polynomial

DEFAULT_TOL_OFF = 1e-10
DEFAULT_TOL_DIAG = 1e-9


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss rule for t^delta (1-t)^gamma on [0, 1]."""

    nodes: np.ndarray
    weights: np.ndarray
    gamma: float
    delta: float

    def integrate(self, values: np.ndarray) -> float:
        return float(np.dot(self.weights, values))


def _jacobi_recurrence(a: float, b: float, count: int):
    """Monic recurrence of (1-y)^a (1+y)^b on [-1, 1]: diagonal and offdiagonal^2."""
    n = np.arange(count, dtype=float)
    s = 2 * n + a + b
    diag = np.empty(count)
    diag[0] = (b - a) / (a + b + 2)
    if count > 1:
        diag[1:] = (b * b - a * a) / (s[1:] * (s[1:] + 2))
    off2 = np.empty(max(count - 1, 0))
    if count > 1:
        off2[0] = 4 * (1 + a) * (1 + b) / ((2 + a + b) ** 2 * (3 + a + b))
        k = n[2:]
        sk = 2 * k + a + b
        off2[1:] = 4 * k * (k + a) * (k + b) * (k + a + b) / (sk ** 2 * (sk + 1) * (sk - 1))
    return diag, off2


def gauss_jacobi_rule(gamma: float, delta: float, count: int) -> QuadratureRule:
    """Golub-Welsch rule with ``count`` nodes for the weight t^delta (1-t)^gamma."""
    if not (gamma > -1 and delta > -1):
        raise ValueError("exponents must exceed -1")
    if count < 1:
        raise ValueError("count must be >= 1")
    gamma, delta = float(gamma), float(delta)
    diag, off2 = _jacobi_recurrence(gamma, delta, count)
    # t = (1 + y) / 2
    d = (1 + diag) / 2
    e = np.sqrt(off2) / 2
    mass = beta_function(delta + 1, gamma + 1)
    if count == 1:
        return QuadratureRule(np.array([d[0]]), np.array([mass]), gamma, delta)
    try:
        nodes, vecs = eigh_tridiagonal(d, e)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"Golub-Welsch eigensolve failed for count={count}") from exc
    weights = mass * vecs[0, :] ** 2
    return QuadratureRule(nodes, weights, gamma, delta)


@dataclass(frozen=True)
class _Folded:
    """Quadrature nodes on the positive half of the support plus folded weights."""

    x: np.ndarray
    plus: np.ndarray   # multiplies F(x)
    minus: np.ndarray  # multiplies F(-x)

    def integrate(self, f: Callable[[np.ndarray], np.ndarray]) -> float:
        return float(np.dot(self.plus, f(self.x)) - np.dot(self.minus, f(-self.x)))


def _folded(params: FamilyParams, count: int, prefactor: Optional[Callable] = None) -> _Folded:
    alpha, beta, c = (float(v) for v in params.as_tuple())
    sigma = 1.0 if c < 1 else -1.0
    if prefactor is None:
        def prefactor(x):
            return sigma * (x + 1) * (x - c)
    rule = gauss_jacobi_rule((alpha - 1) / 2, (beta - 1) / 2, count)
    span = 1 - c * c
    u = c * c + span * rule.nodes
    x = np.sqrt(u)
    scale = abs(span) ** ((alpha + beta) / 2)
    base = scale * rule.weights / (2 * x)
    return _Folded(x, base * prefactor(x), base * prefactor(-x))


def integrate(params: FamilyParams, f: Callable[[np.ndarray], np.ndarray], degree: int,
              prefactor: Optional[Callable] = None) -> float:
    """Integral of f w over the support, exact for polynomial f of the given degree."""
    count = max(degree, 0) // 2 + 4
    return _folded(params, count, prefactor).integrate(f)


def _binomial_beta_sum(j: int, lead: float, step: float, p: float, q: float, shift_p: bool) -> float:
    total = 0.0
    for i in range(j + 1):
        bp, bq = (p + i, q) if shift_p else (p, q + i)
        total += math.comb(j, i) * lead ** (j - i) * step ** i * beta_function(bp, bq)
    return total


def _u_moment(params: FamilyParams, j: int) -> float:
    """int g(u) u^j du over the u-image of the support, from Beta functions."""
    alpha, beta, c = (float(v) for v in params.as_tuple())
    p, q = (beta + 1) / 2, (alpha + 1) / 2   # exponents of t and of 1-t, plus one
    scale = abs(1 - c * c) ** ((alpha + beta) / 2)
    if c < 1:
        # u = c^2 + (1 - c^2) t
        return scale * _binomial_beta_sum(j, c * c, 1 - c * c, p, q, shift_p=True)
    # u = 1 + (c^2 - 1)(1 - t)
    return scale * _binomial_beta_sum(j, 1.0, c * c - 1, p, q, shift_p=False)


def moment_analytic(params: FamilyParams, n: int) -> float:
    c = float(params.c)
    sigma = 1.0 if c < 1 else -1.0
    k = n // 2
    if n % 2 == 0:
        return sigma * (1 - c) * _u_moment(params, k)
    return sigma * (_u_moment(params, k + 1) - c * _u_moment(params, k))


def moment_quadrature(params: FamilyParams, n: int) -> float:
    return integrate(params, lambda x: x ** n, n)


def moment(params: FamilyParams, n: int, method: str = "analytic") -> float:
    """m_n = int_Gamma x^n w(x) dx."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if method == "analytic":
        return moment_analytic(params, n)
    if method == "quadrature":
        return moment_quadrature(params, n)
    raise ValueError(f"unknown method {method!r}")


def inner_product(params: FamilyParams, p: Polynomial, q: Polynomial) -> float:
    pf, qf = p.to_float(), q.to_float()
    return integrate(params, lambda x: pf(x) * qf(x), p.degree + q.degree + 2)


def family_values(u, b, n_max: int, x: np.ndarray) -> np.ndarray:
    """Rows P_0..P_n_max evaluated at x by the float three-term recurrence."""
    out = np.empty((n_max + 1, x.size))
    out[0] = 1.0
    if n_max >= 1:
        out[1] = x - float(b[0])
    for n in range(1, n_max):
        out[n + 1] = (x - float(b[n])) * out[n] - float(u[n]) * out[n - 1]
    return out


def gram_matrix(params: FamilyParams, n_max: int) -> np.ndarray:
    rec = recurrence_coeffs(params, n_max)
    fold = _folded(params, n_max + 6)
    vp = family_values(rec.u, rec.b, n_max, fold.x)
    vm = family_values(rec.u, rec.b, n_max, -fold.x)
    return (vp * fold.plus) @ vp.T - (vm * fold.minus) @ vm.T


@dataclass(frozen=True)
class GramReport:
    n_max: int
    offdiag_max: float
    diag_ratio_err: float
    tol_off: float
    tol_diag: float
    passed: bool
    diag_positive: bool


def gram_check(params: FamilyParams, n_max: int, tol_off: float = DEFAULT_TOL_OFF,
               tol_diag: float = DEFAULT_TOL_DIAG) -> GramReport:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    gram = gram_matrix(params, n_max)
    diag = np.diag(gram)
    positive = bool(np.all(diag > 0))
    norm = np.sqrt(np.outer(np.abs(diag), np.abs(diag)))
    off = np.abs(gram) / norm
    np.fill_diagonal(off, 0.0)
    u = recurrence_coeffs(params, n_max).u
    ratio_err = 0.0
    for n in range(1, n_max + 1):
        expected = float(u[n])
        ratio_err = max(ratio_err, abs(diag[n] / diag[n - 1] - expected) / abs(expected))
    offdiag_max = float(off.max())
    ok = bool(positive and offdiag_max < tol_off and ratio_err < tol_diag)
    return GramReport(n_max, offdiag_max, float(ratio_err), tol_off, tol_diag, ok, positive)


def interleaved_weight(params: FamilyParams, x: float) -> float:
    """theta(x) (1+x) |1-x^2|^xi |x^2-c^2|^eta with xi = (alpha-1)/2, eta = (beta+1)/2."""
    alpha, beta, c = (float(v) for v in params.as_tuple())
    theta = 1.0 if x > 0 else -1.0
    return theta * (1 + x) * abs(1 - x * x) ** ((alpha - 1) / 2) * abs(x * x - c * c) ** ((beta + 1) / 2)


def _divided_prefactor(params: FamilyParams, mu: float) -> Callable:
    """Polynomial prefactor of W(x) / (x - mu) for mu = -c or mu = +c."""
    c = float(params.c)
    sigma = 1.0 if c < 1 else -1.0
    if mu == -c:
        return lambda x: sigma * (1 + x) * (x - c)
    if mu == c:
        return lambda x: sigma * (1 + x) * (x + c)
    raise ValueError("only mu = -c and mu = +c give an integrable polynomial prefactor")


def point_mass_test(params: FamilyParams, mu: Optional[float] = None) -> float:
    """Normalised |int P_1 W / (x - mu) dx|; near zero means no point mass is needed."""
    c = float(params.c)
    mu = -c if mu is None else float(mu)
    pref = _divided_prefactor(params, mu)
    a, b = float(params.alpha), float(params.beta)
    zeta = (c * (a + 1) - b - 1) / (2 + a + b)
    num = integrate(params, lambda x: x + zeta, 1, pref)
    mass = integrate(params, lambda x: np.ones_like(x), 0, pref)
    return abs(num) / abs(mass)

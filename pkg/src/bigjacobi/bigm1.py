"""
Big -1 Jacobi polynomials: recurrence data, generation, closed forms, weight.

The monic family satisfies

    P_{n+1}(x) = (x - b_n) P_n(x) - u_n P_{n-1}(x)

with ``u_n = A_{n-1} C_n`` and ``b_n = 1 - A_n - C_n`` built from the
parity-dependent pair (A_n, C_n).  The same coefficient formulas serve both
c-branches (0 < c < 1 and c > 1); only the weight differs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .dunkl import FamilyParams
from .errors import DomainError, InconsistencyError, PoleError
from .numeric import EXACT, Polynomial, Scalar, as_scalar, pochhammer, scalar_kind


# Raw coefficient formulas.  They accept any (alpha, beta, c), including the
# degenerate values c = 0 and c = 1 that FamilyParams refuses.

def formula_A(alpha, beta, c, n: int) -> Scalar:
    if n % 2 == 0:
        return (c + 1) * (alpha + n + 1) / (alpha + beta + 2 * n + 2)
    return (1 - c) * (alpha + beta + n + 1) / (alpha + beta + 2 * n + 2)


def formula_C(alpha, beta, c, n: int) -> Scalar:
    if n == 0:
        return 0 * c
    if n % 2 == 0:
        return (1 - c) * n / (alpha + beta + 2 * n)
    return (1 + c) * (beta + n) / (alpha + beta + 2 * n)


def formula_u(alpha, beta, c, n: int) -> Scalar:
    if n < 1:
        raise ValueError("u_n is defined for n >= 1")
    if n % 2 == 0:
        return (1 - c) ** 2 * n * (alpha + beta + n) / (alpha + beta + 2 * n) ** 2
    return (1 + c) ** 2 * (alpha + n) * (beta + n) / (alpha + beta + 2 * n) ** 2


def formula_b(alpha, beta, c, n: int) -> Scalar:
    if n % 2 == 0:
        middle = (c - 1) * n / (alpha + beta + 2 * n) if n else 0 * c
        return -c + middle + (1 + c) * (beta + n + 1) / (alpha + beta + 2 * n + 2)
    return c + (1 - c) * (n + 1) / (alpha + beta + 2 * n + 2) - (c + 1) * (beta + n) / (alpha + beta + 2 * n)


def limit_AC(params: FamilyParams, n: int) -> Tuple[Scalar, Scalar]:
    if n < 0:
        raise ValueError("n must be >= 0")
    a, b, c = params.as_tuple()
    return formula_A(a, b, c, n), formula_C(a, b, c, n)


@dataclass(frozen=True)
class RecurrencePair:
    """Monic three-term data.  ``u[0]`` is a placeholder zero; u_n for n >= 1."""

    u: tuple
    b: tuple

    @property
    def n_max(self) -> int:
        return len(self.b) - 1


def recurrence_coeffs(params: FamilyParams, n_max: int) -> RecurrencePair:
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    a, b, c = params.as_tuple()
    us = [0 * c]
    bs = []
    for n in range(n_max + 1):
        A_n, C_n = limit_AC(params, n)
        b_n = formula_b(a, b, c, n)
        if b_n != 1 - A_n - C_n and not _close(b_n, 1 - A_n - C_n):
            raise InconsistencyError(f"b_{n} disagrees with 1 - A_n - C_n")
        bs.append(b_n)
        if n >= 1:
            u_n = formula_u(a, b, c, n)
            product = limit_AC(params, n - 1)[0] * C_n
            if u_n != product and not _close(u_n, product):
                raise InconsistencyError(f"u_{n} disagrees with A_(n-1) C_n")
            us.append(u_n)
    return RecurrencePair(u=tuple(us), b=tuple(bs))


def _close(x, y) -> bool:
    # exact values must agree exactly; floats to rounding
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return False
    return abs(float(x) - float(y)) <= 1e-12 * max(1.0, abs(float(x)))


def polys_from_recurrence(u: Sequence, b: Sequence, n_max: int, kind: str = EXACT) -> List[Polynomial]:
    """Monic polynomials from P_{n+1} = (x - b_n) P_n - u_n P_{n-1}."""
    x = Polynomial.x(kind)
    one = Polynomial.constant(1) if kind == EXACT else Polynomial([1.0])
    polys = [one]
    if n_max >= 1:
        polys.append(x - b[0])
    for n in range(1, n_max):
        polys.append((x - b[n]) * polys[n] - polys[n - 1].scale(u[n]))
    return polys[: n_max + 1]


def generate(params: FamilyParams, n_max: int) -> List[Polynomial]:
    rec = recurrence_coeffs(params, n_max)
    return polys_from_recurrence(rec.u, rec.b, n_max, params.kind)


def hyp_2f1_terminating(m: int, b, c, z):
    """Terminating Gauss series 2F1(-m, b; c; z).

    ``z`` may be a scalar or a Polynomial; the sum is formed by Horner's rule
    in ``z`` so polynomial arguments expand symbolically.
    """
    if m < 0:
        raise ValueError("m must be a nonnegative integer")
    b = as_scalar(b)
    c = as_scalar(c)
    terms = []
    term = Fraction(1) if scalar_kind(c) == EXACT and scalar_kind(b) == EXACT else 1.0
    for s in range(m + 1):
        terms.append(term)
        if s == m:
            break
        if c + s == 0:
            raise PoleError(f"(c)_s vanishes at s = {s + 1} with c = {c}")
        term = term * (-m + s) * (b + s) / ((c + s) * (s + 1))
    acc = terms[-1]
    for coeff in reversed(terms[:-1]):
        acc = acc * z + coeff
    return acc


def kappa(params: FamilyParams, n: int) -> Scalar:
    a, b, c = params.as_tuple()
    if n % 2 == 0:
        k = n // 2
        return (1 - c * c) ** k * pochhammer((a + 1) / 2, k) / pochhammer((n + a + b + 2) / 2, k)
    k = (n - 1) // 2
    return (1 + c) * (1 - c * c) ** k * pochhammer((a + 1) / 2, k + 1) / pochhammer((n + a + b + 1) / 2, k + 1)


def explicit_form(params: FamilyParams, n: int) -> Polynomial:
    """Monic P_n from its two-term Gauss-series representation in (1-x^2)/(1-c^2)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    a, b, c = params.as_tuple()
    one = params.one()
    z = (Polynomial([one, 0 * one, -one])) / (1 - c * c)
    one_minus_x = Polynomial([one, -one])
    lead = one_minus_x / ((1 + c) * (a + 1))
    if n % 2 == 0:
        m = n // 2
        body = _as_poly(hyp_2f1_terminating(m, (n + a + b + 2) / 2, (a + 1) / 2, z), params)
        if n > 0:
            tail = _as_poly(hyp_2f1_terminating(m - 1, (n + a + b + 2) / 2, (a + 3) / 2, z), params)
            body = body + (lead * tail).scale(n * one)
    else:
        m = (n - 1) // 2
        body = _as_poly(hyp_2f1_terminating(m, (n + a + b + 1) / 2, (a + 1) / 2, z), params)
        tail = _as_poly(hyp_2f1_terminating(m, (n + a + b + 3) / 2, (a + 3) / 2, z), params)
        body = body - (lead * tail).scale(a + b + n + 1)
    return body.scale(kappa(params, n))


def _as_poly(value, params: FamilyParams) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial([value], kind=params.kind)


# Weight on the two-interval support.

@dataclass(frozen=True)
class WeightSpec:
    params: FamilyParams
    support: Tuple[Tuple[float, float], Tuple[float, float]]
    branch: str  # "c<1" or "c>1"

    @classmethod
    def of(cls, params: FamilyParams) -> "WeightSpec":
        c = float(params.c)
        if c < 1:
            return cls(params, ((-1.0, -c), (c, 1.0)), "c<1")
        return cls(params, ((-c, -1.0), (1.0, c)), "c>1")

    def contains(self, x: float) -> bool:
        """True for points of the open support."""
        return any(lo < x < hi for lo, hi in self.support)


def weight_formula(alpha, beta, c, x: float) -> float:
    """Weight value for raw parameters, c = 0 included.

    For 0 <= c < 1:  theta(x) (x+1)(x-c) (1-x^2)^((a-1)/2) (x^2-c^2)^((b-1)/2)
    for c > 1:       theta(x) (x+1)(c-x) (x^2-1)^((a-1)/2) (c^2-x^2)^((b-1)/2)
    """
    alpha, beta, c, x = float(alpha), float(beta), float(c), float(x)
    ax = abs(x)
    lo, hi = (c, 1.0) if c < 1 else (1.0, c)
    if not (lo < ax < hi):
        raise DomainError(f"x = {x} is outside the open support")
    theta = 1.0 if x > 0 else -1.0
    if c < 1:
        return theta * (x + 1) * (x - c) * (1 - x * x) ** ((alpha - 1) / 2) * (x * x - c * c) ** ((beta - 1) / 2)
    return theta * (x + 1) * (c - x) * (x * x - 1) ** ((alpha - 1) / 2) * (c * c - x * x) ** ((beta - 1) / 2)


def weight(params: FamilyParams, x) -> float:
    return weight_formula(params.alpha, params.beta, params.c, x)


def little_weight(alpha, beta, x: float) -> float:
    """(1 + x) |x|^beta (1 - x^2)^((alpha-1)/2) on (-1, 1) minus the origin."""
    alpha, beta, x = float(alpha), float(beta), float(x)
    if not (0 < abs(x) < 1):
        raise DomainError(f"x = {x} is outside (-1, 0) U (0, 1)")
    return (1 + x) * abs(x) ** beta * (1 - x * x) ** ((alpha - 1) / 2)


def weight_even_part(params: FamilyParams, x: float) -> float:
    """w(x) + w(-x) for x in the positive interval of the support."""
    return weight(params, x) + weight(params, -x)


def beta_function(p: float, q: float) -> float:
    return math.exp(math.lgamma(p) + math.lgamma(q) - math.lgamma(p + q))

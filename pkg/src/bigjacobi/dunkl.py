"""
The Dunkl-type operator L0 of the big -1 Jacobi family.

L0 is applied through its action on monomials, which keeps every result a
polynomial and the rational path exact:

    L0 x^n = 2n (x - 1)(x + c) x^(n-2)                                 n even
    L0 x^n = -2(a+b+n+1) x^n + 2(b - c a + n(1-c)) x^(n-1) + 2(n-1) c x^(n-2)   n odd

(a, b stand for alpha, beta).  Both follow from
L0 f(x) = g0(x) (f(-x) - f(x)) - g1(x) f'(-x) with
g0 = ((a+b+1) x^2 + (c a - b) x + c) / x^2 and g1 = 2 (x-1)(x+c) / x,
which is used only as a point-evaluation cross check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from .errors import DegenerateSpectrumError, ParameterError
from .numeric import EXACT, FLOAT, Polynomial, Scalar, as_scalar, scalar_kind


@dataclass(frozen=True)
class FamilyParams:
    """Parameters (alpha, beta, c) of a big -1 Jacobi family.

    All three values share one scalar kind.  Construction enforces
    alpha, beta > -1, c > 0 and c != 1.
    """

    alpha: Scalar
    beta: Scalar
    c: Scalar

    def __post_init__(self):
        vals = [as_scalar(v) for v in (self.alpha, self.beta, self.c)]
        if len({scalar_kind(v) for v in vals}) > 1:
            vals = [float(v) for v in vals]
        object.__setattr__(self, "alpha", vals[0])
        object.__setattr__(self, "beta", vals[1])
        object.__setattr__(self, "c", vals[2])
        if not (self.alpha > -1 and self.beta > -1):
            raise ParameterError(f"need alpha > -1 and beta > -1, got alpha={self.alpha}, beta={self.beta}")
        if not self.c > 0:
            raise ParameterError(f"need c > 0, got c={self.c}")
        if self.c == 1:
            raise ParameterError("c = 1 is degenerate: u_2n vanish and the support collapses to {-1, 1}")

    @property
    def kind(self) -> str:
        return scalar_kind(self.alpha)

    @property
    def exact(self) -> bool:
        return self.kind == EXACT

    def as_tuple(self):
        return (self.alpha, self.beta, self.c)

    def to_float(self) -> "FamilyParams":
        return FamilyParams(float(self.alpha), float(self.beta), float(self.c))

    def one(self) -> Scalar:
        return Fraction(1) if self.exact else 1.0


@dataclass(frozen=True)
class TriangularAction:
    """Banded form of L0 in the monomial basis.

    ``L0 x^n = xi[n] x^n + eta[n] x^(n-1) + zeta[n] x^(n-2)`` for
    ``0 <= n <= size``.
    """

    xi: tuple
    eta: tuple
    zeta: tuple
    size: int

    def apply(self, p: Polynomial) -> Polynomial:
        if p.degree > self.size:
            raise ValueError(f"degree {p.degree} exceeds the represented size {self.size}")
        out = [0 * v for v in p.coeffs]
        for n, v in enumerate(p.coeffs):
            out[n] += self.xi[n] * v
            if n >= 1:
                out[n - 1] += self.eta[n] * v
            if n >= 2:
                out[n - 2] += self.zeta[n] * v
        return Polynomial(out, kind=p.kind)

    def dense(self) -> List[list]:
        """Dense (size+1) x (size+1) matrix; column n is the image of x^n."""
        zero = 0 * self.xi[0]
        rows = [[zero] * (self.size + 1) for _ in range(self.size + 1)]
        for n in range(self.size + 1):
            rows[n][n] = self.xi[n]
            if n >= 1:
                rows[n - 1][n] = self.eta[n]
            if n >= 2:
                rows[n - 2][n] = self.zeta[n]
        return rows


def _monomial_action(alpha, beta, c, n):
    """Return (xi_n, eta_n, zeta_n) for raw parameter values."""
    if n % 2 == 0:
        # 2n (x^2 + (c-1) x - c) x^(n-2)
        return 2 * n + 0 * c, 2 * n * (c - 1), -2 * n * c
    return (
        -2 * (alpha + beta + n + 1),
        2 * (beta - c * alpha + n * (1 - c)),
        2 * (n - 1) * c,
    )


def l0_matrix(params: FamilyParams, size: int) -> TriangularAction:
    if size < 1:
        raise ValueError("size must be >= 1")
    a, b, c = params.as_tuple()
    cols = [_monomial_action(a, b, c, n) for n in range(size + 1)]
    return TriangularAction(
        xi=tuple(col[0] for col in cols),
        eta=tuple(col[1] for col in cols),
        zeta=tuple(col[2] for col in cols),
        size=size,
    )


def apply_L0(params: FamilyParams, p: Polynomial) -> Polynomial:
    if p.is_zero():
        return p
    if p.kind != params.kind:
        p = p.to_float() if params.kind == FLOAT else p
        if p.kind != params.kind:
            raise ParameterError("exact polynomial requires exact parameters")
    return l0_matrix(params, max(p.degree, 1)).apply(p)


def l0_pointwise(params: FamilyParams, p: Polynomial, x0) -> Scalar:
    """Evaluate L0 p at x0 != 0 from the rational-function form."""
    x0 = as_scalar(x0)
    if x0 == 0:
        raise ValueError("the rational-function form of L0 is singular at x = 0")
    a, b, c = params.as_tuple()
    g0 = ((a + b + 1) * x0 ** 2 + (c * a - b) * x0 + c) / x0 ** 2
    g1 = 2 * (x0 - 1) * (x0 + c) / x0
    return g0 * (p(-x0) - p(x0)) - g1 * p.derivative()(-x0)


def eigenvalue_lambda(n: int, params: FamilyParams) -> Scalar:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n % 2 == 0:
        return 2 * n * params.one()
    return -2 * (params.alpha + params.beta + n + 1)


def phi_basis(n: int, kind: str = EXACT) -> Polynomial:
    """Two-diagonal basis: (x^2-1)^k for n = 2k, (x-1)(x^2-1)^k for n = 2k+1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    one = Fraction(1) if kind == EXACT else 1.0
    base = Polynomial([-one, 0 * one, one]) ** (n // 2)
    if n % 2:
        base = base * Polynomial([-one, one])
    return base


def eta_phi(n: int, params: FamilyParams) -> Scalar:
    """Subdiagonal of L0 in the phi basis."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n % 2 == 0:
        return 2 * n * (params.c - 1)
    return -2 * (params.c + 1) * (params.alpha + n)


def phi_coefficients(params: FamilyParams, n: int) -> List[Scalar]:
    """Expansion coefficients A_{n,s}, s = 0..n, of the monic eigenpolynomial.

    Computed downward from A_{n,n} = 1 via
    A_{n,s} = A_{n,s+1} eta_{s+1} / (lambda_n - lambda_s).
    """
    lam_n = eigenvalue_lambda(n, params)
    coeffs = [params.one()] * (n + 1)
    for s in range(n - 1, -1, -1):
        gap = lam_n - eigenvalue_lambda(s, params)
        if gap == 0:
            raise DegenerateSpectrumError(f"lambda_{n} = lambda_{s} = {lam_n}")
        coeffs[s] = coeffs[s + 1] * eta_phi(s + 1, params) / gap
    return coeffs


def pn_via_phi(params: FamilyParams, n: int) -> Polynomial:
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = phi_coefficients(params, n)
    out = Polynomial.zero(params.kind)
    for s, a_ns in enumerate(coeffs):
        out = out + phi_basis(s, params.kind).scale(a_ns)
    return out


def phi_family(params: FamilyParams, n_max: int) -> Sequence[Polynomial]:
    return [pn_via_phi(params, n) for n in range(n_max + 1)]

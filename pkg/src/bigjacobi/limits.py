"""
Degenerations onto the big -1 Jacobi family.

q -> -1: with q = -e^eps, a = -e^(eps alpha), b = -e^(eps beta) the big
q-Jacobi recurrence data and the rescaled operator (q+1)^(-1) L tend to
their -1 counterparts as eps -> 0.  Every q-quantity is a signed sum of
exponentials e^(eps k); factors such as 1 - a q^(n+1) and the operator
coefficients are evaluated through expm1 so the O(1) parts cancel exactly
instead of in floating point.

N -> infinity: Bannai-Ito data with r1 = alpha, s* = -alpha-beta,
r2 = -N-1 and h, r3 pinned so that 2 h r2 = c + 1 and 2 h r3 = c - 1 at
every finite N.  All BI quantities stay rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .bigm1 import formula_A, formula_C, formula_u
from .dunkl import FamilyParams, apply_L0
from .errors import DegenerateDenominatorError, ParameterError
from .numeric import FLOAT, Polynomial, Scalar, as_scalar


class ExpSum:
    """Finite sum  sum_k coef_k * exp(eps * k)  with exact exponents and coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict | None = None):
        self.terms: Dict = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def const(cls, value) -> "ExpSum":
        return cls({0: value})

    @classmethod
    def exp(cls, k, coef=1) -> "ExpSum":
        return cls({k: coef})

    def __add__(self, other) -> "ExpSum":
        if not isinstance(other, ExpSum):
            other = ExpSum.const(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return ExpSum(out)

    __radd__ = __add__

    def __neg__(self) -> "ExpSum":
        return ExpSum({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> "ExpSum":
        if not isinstance(other, ExpSum):
            other = ExpSum.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "ExpSum":
        return ExpSum.const(other) - self

    def __mul__(self, other) -> "ExpSum":
        if not isinstance(other, ExpSum):
            return ExpSum({k: v * other for k, v in self.terms.items()})
        out: Dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
        return ExpSum(out)

    __rmul__ = __mul__

    def value(self, eps: float) -> float:
        # sum coef e^(eps k) = sum coef + sum coef expm1(eps k); the first sum is exact
        constant = sum(self.terms.values(), 0)
        return float(constant) + math.fsum(float(v) * math.expm1(eps * float(k)) for k, v in self.terms.items())


@dataclass(frozen=True)
class QParams:
    """Big q-Jacobi parameters on the curve q = -e^eps, a = -e^(eps alpha), b = -e^(eps beta)."""

    alpha: Scalar
    beta: Scalar
    c: Scalar
    eps: float

    def __post_init__(self):
        if not self.eps > 0:
            raise ParameterError("eps must be positive")
        for name in ("alpha", "beta", "c"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))

    @classmethod
    def from_family(cls, params: FamilyParams, eps: float) -> "QParams":
        return cls(params.alpha, params.beta, params.c, float(eps))

    @property
    def q(self) -> float:
        return -math.exp(self.eps)

    @property
    def a(self) -> float:
        return -math.exp(self.eps * float(self.alpha))

    @property
    def b(self) -> float:
        return -math.exp(self.eps * float(self.beta))

    @property
    def c_q(self) -> float:
        return float(self.c)

    # signed exponentials for the building blocks
    def _q_pow(self, n: int) -> ExpSum:
        return ExpSum.exp(n, (-1) ** (n % 2))

    def _a(self) -> ExpSum:
        return ExpSum.exp(self.alpha, -1)

    def _b(self) -> ExpSum:
        return ExpSum.exp(self.beta, -1)


def q_jacobi_AC(qp: QParams, n: int) -> Tuple[float, float]:
    """Big q-Jacobi (A_n, C_n) on the eps-curve."""
    if n < 0:
        raise ValueError("n must be >= 0")
    eps, c = qp.eps, qp.c
    a, b, q = qp._a(), qp._b(), qp._q_pow
    ab = a * b

    def val(e: ExpSum) -> float:
        return e.value(eps)

    den_A = val(1 - ab * q(2 * n + 1)) * val(1 - ab * q(2 * n + 2))
    if den_A == 0:
        raise DegenerateDenominatorError(f"A_{n} denominator vanishes")
    A = val(1 - a * q(n + 1)) * val(1 - ab * q(n + 1)) * val(1 - q(n + 1) * c) / den_A
    if n == 0:
        return A, 0.0
    den_C = val(1 - ab * q(2 * n + 1)) * val(1 - ab * q(2 * n))
    if den_C == 0:
        raise DegenerateDenominatorError(f"C_{n} denominator vanishes")
    C = -val(a * q(n + 1) * c) * val(1 - q(n)) * val(1 - ab * q(n) * (1 / c)) * val(1 - b * q(n)) / den_C
    return A, C


def q_jacobi_recurrence(qp: QParams, n_max: int) -> Tuple[List[float], List[float]]:
    """(u, b) with u_n = A_{n-1} C_n and b_n = 1 - A_n - C_n; u[0] is a placeholder."""
    AC = [q_jacobi_AC(qp, n) for n in range(n_max + 1)]
    u = [0.0] + [AC[n - 1][0] * AC[n][1] for n in range(1, n_max + 1)]
    b = [1 - A - C for A, C in AC]
    return u, b


def _lq_monomial(qp: QParams, n: int) -> Tuple[ExpSum, ExpSum, ExpSum]:
    """Coefficients of x^n, x^(n-1), x^(n-2) in L x^n as exponential sums."""
    c = qp.c
    a, b = qp._a(), qp._b()
    q1 = qp._q_pow(1)
    aq = a * q1
    cq = q1 * c
    d = qp._q_pow(n) - 1
    e = ExpSum.exp(-n, (-1) ** (n % 2)) - 1
    top = aq * b * d + e
    mid = -(aq * d * (b + c)) - e * (aq + cq)
    low = aq * d * c + e * (aq * cq)
    return top, mid, low


def apply_Lq(qp: QParams, p: Polynomial) -> Polynomial:
    """(q+1)^(-1) L p in the monomial basis, as a float polynomial."""
    eps = qp.eps
    scale = -math.expm1(eps)  # q + 1
    coeffs = [float(v) for v in p.coeffs]
    out = [0.0] * len(coeffs)
    for n, v in enumerate(coeffs):
        if n == 0 or v == 0:
            continue
        top, mid, low = _lq_monomial(qp, n)
        out[n] += v * top.value(eps) / scale
        out[n - 1] += v * mid.value(eps) / scale
        # for n = 1 the x^(-1) coefficient cancels identically
        if n >= 2:
            out[n - 2] += v * low.value(eps) / scale
    return Polynomial(out, kind=FLOAT)


def q_eigenvalue(qp: QParams, n: int) -> float:
    """lambda_n = (q^-n - 1)(1 - a b q^(n+1)) of the unscaled operator."""
    e = ExpSum.exp(-n, (-1) ** (n % 2)) - 1
    ab = qp._a() * qp._b()
    return e.value(qp.eps) * (1 - ab * qp._q_pow(n + 1)).value(qp.eps)


def lq_limit_errors(params: FamilyParams, eps: float, n_max: int) -> List[float]:
    """Max coefficient gap between (q+1)^(-1) L x^n and L0 x^n for n = 0..n_max."""
    qp = QParams.from_family(params, eps)
    out = []
    for n in range(n_max + 1):
        mono = Polynomial.monomial(n)
        lq = apply_Lq(qp, mono)
        l0 = apply_L0(params, mono).to_float()
        width = max(len(lq.coeffs), len(l0.coeffs))
        out.append(max((abs(lq.coeff(i) - l0.coeff(i)) for i in range(width)), default=0.0))
    return out


def u_limit_errors(params: FamilyParams, eps: float, n_max: int) -> List[float]:
    """|u_n(eps) - u_n^(-1)| for n = 1..n_max (index 0 unused)."""
    u, _ = q_jacobi_recurrence(QParams.from_family(params, eps), n_max)
    a, b, c = params.as_tuple()
    return [0.0] + [abs(u[n] - float(formula_u(a, b, c, n))) for n in range(1, n_max + 1)]


# Bannai-Ito side

@dataclass(frozen=True)
class BIParams:
    """Bannai-Ito data; ``s`` follows from s + s* = r3 - r1 - r2."""

    h: Fraction
    r1: Fraction
    r2: Fraction
    r3: Fraction
    s_star: Fraction
    N: int
    theta0: Fraction = Fraction(1)
    s: Fraction = field(init=False)

    def __post_init__(self):
        for name in ("h", "r1", "r2", "r3", "s_star", "theta0"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))
        object.__setattr__(self, "s", self.r3 - self.r1 - self.r2 - self.s_star)
        if self.N < 0:
            raise ParameterError("N must be >= 0")
        if self.N % 2 == 0 and self.r2 != -self.N - 1:
            raise ParameterError("N even requires r2 = -N-1")
        if self.N % 2 == 1 and self.r3 != self.N + 1:
            raise ParameterError("N odd requires r3 = N+1")


def bannai_ito_AC(bp: BIParams, n: int) -> Tuple[Scalar, Scalar]:
    if not 0 <= n <= bp.N:
        raise ValueError(f"n must lie in [0, {bp.N}]")
    h, r1, r2, r3, ss = bp.h, bp.r1, bp.r2, bp.r3, bp.s_star
    den_A = 2 * n + 2 - ss
    den_C = 2 * n - ss
    if den_A == 0 or (n > 0 and den_C == 0):
        raise DegenerateDenominatorError(f"vanishing denominator at n={n}")
    if n % 2 == 0:
        A = 2 * h * (n + 1 + r1) * (n + 1 + r2) / den_A
        C = -2 * h * n * (n - ss + r3) / den_C if n else 0 * h
    else:
        A = 2 * h * (n + 1 - ss) * (n + 1 - r3) / den_A
        C = -2 * h * (n - r1 - ss) * (n - r2 - ss) / den_C
    return A, C


def bi_monic_recurrence(bp: BIParams, n_max: int) -> Tuple[List[Scalar], List[Scalar]]:
    """Monic data: b_n = theta0 - A_n - C_n, u_n = A_{n-1} C_n."""
    AC = [bannai_ito_AC(bp, n) for n in range(n_max + 1)]
    u = [0 * bp.h] + [AC[n - 1][0] * AC[n][1] for n in range(1, n_max + 1)]
    b = [bp.theta0 - A - C for A, C in AC]
    return u, b


def bi_grid(bp: BIParams, i: int) -> Scalar:
    if not 0 <= i <= bp.N:
        raise ValueError(f"i must lie in [0, {bp.N}]")
    if i % 2 == 0:
        return bp.theta0 + 2 * bp.h * i
    return bp.theta0 - 2 * bp.h * (i + 1 - bp.s)


def bi_limit_params(params: FamilyParams, N: int) -> BIParams:
    if N % 2:
        raise ParameterError("only even N is implemented")
    if not params.c < 1:
        raise ParameterError("the Bannai-Ito limit is set up for 0 < c < 1")
    a, b, c = params.as_tuple()
    r2 = Fraction(-N - 1) if params.exact else float(-N - 1)
    h = (c + 1) / (2 * r2)
    r3 = (c - 1) / (2 * h)
    return BIParams(h=h, r1=a, r2=r2, r3=r3, s_star=-a - b, N=N)


@dataclass(frozen=True)
class BIConvergence:
    N_list: tuple
    A_errors: tuple
    C_errors: tuple
    A_ratios: tuple
    C_ratios: tuple
    C0_exact_zero: bool


def bi_convergence(params: FamilyParams, n_max: int, N_list: Sequence[int]) -> BIConvergence:
    """max_n |A_n(N) - A_n^(-1)|, same for C, and successive error ratios."""
    a, b, c = params.as_tuple()
    A_err, C_err, c0_zero = [], [], True
    for N in N_list:
        if N % 2 or N <= 2 * n_max:
            raise ParameterError(f"N = {N} must be even and exceed 2 n_max")
        bp = bi_limit_params(params, N)
        ea = ec = 0 * c
        for n in range(n_max + 1):
            A_n, C_n = bannai_ito_AC(bp, n)
            ea = max(ea, abs(A_n - formula_A(a, b, c, n)))
            ec = max(ec, abs(C_n - formula_C(a, b, c, n)))
            if n == 0 and C_n != 0:
                c0_zero = False
        A_err.append(ea)
        C_err.append(ec)

    def ratios(errs):
        return tuple(errs[k + 1] / errs[k] if errs[k] else float("nan") for k in range(len(errs) - 1))

    return BIConvergence(tuple(N_list), tuple(A_err), tuple(C_err), ratios(A_err), ratios(C_err), c0_zero)


@dataclass(frozen=True)
class BIGridReport:
    N: int
    window: int           # indices 0..window are compared with the support
    max_distance: float   # largest distance from a windowed point to [-1,-c] U [c,1]
    max_gap: float        # largest uncovered stretch of either interval
    outside_window: int


def bi_grid_report(params: FamilyParams, N: int) -> BIGridReport:
    """Where the grid points x_i, i <= r3, fall relative to the two intervals.

    Within i <= r3 the even points run from 1 down to c and the odd points
    from -1 up to -c; the indices beyond r3 belong to the part of the finite
    spectrum that has no counterpart in the limit.
    """
    bp = bi_limit_params(params, N)
    c = float(params.c)
    window = min(int(math.floor(bp.r3)), N)
    even, odd = [], []
    worst = 0.0
    for i in range(window + 1):
        x = float(bi_grid(bp, i))
        if c <= abs(x) <= 1:
            dist = 0.0
        else:
            dist = min(abs(abs(x) - c), abs(abs(x) - 1))
        if (i % 2 == 0) != (x > 0):
            dist = max(dist, abs(x))
        worst = max(worst, dist)
        (even if i % 2 == 0 else odd).append(x)
    # spacing between neighbours, plus the uncovered ends of [c, 1] and [-1, -c]
    gaps = []
    for pts, lo, hi in ((sorted(even), c, 1.0), (sorted(odd), -1.0, -c)):
        if pts:
            gaps += [pts[0] - lo, hi - pts[-1]]
            gaps += [pts[k + 1] - pts[k] for k in range(len(pts) - 1)]
    return BIGridReport(N, window, worst, max(gaps, default=0.0), N - window)

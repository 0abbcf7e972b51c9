"""
The anticommutator algebra realized by X = L0 + alpha + beta + 1, Y = x and

    Z f(x) = -(2/x) (c f(x) + (x-1)(x+c) f(-x)).

On monomials Z acts without any division:

    Z x^n = -2 x^(n+1) - 2(c-1) x^n                    n even
    Z x^n =  2 x^(n+1) + 2(c-1) x^n - 4c x^(n-1)        n odd

The relations checked are

    XY + YX = Z + w3,   YZ + ZY = w1,   ZX + XZ = 4Y + w2

with w1 = -4c, w2 = 4(alpha - beta c), w3 = 2(beta - alpha c), and the
Casimir Z^2 + 4Y^2 = 4(c^2 + 1).  Operators are stored as square matrices
on polynomials of degree <= size; since Y and Z raise the degree, every
identity is only compared on the columns where no product leaves that
space.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .bigm1 import recurrence_coeffs
from .dunkl import FamilyParams, eigenvalue_lambda, l0_matrix
from .numeric import Polynomial, Scalar, as_scalar
from .report import VerificationReport


@dataclass(frozen=True)
class OperatorMatrix:
    """Square matrix on a basis of size ``size + 1``; column j is the image of basis vector j.

    ``band = (lo, hi)`` records the reach: column j has nonzeros only in rows
    j - lo .. j + hi.
    """

    entries: Tuple[Tuple[Scalar, ...], ...]
    band: Tuple[int, int]

    @property
    def size(self) -> int:
        return len(self.entries) - 1

    @classmethod
    def from_columns(cls, columns: Sequence[dict], size: int, zero, band) -> "OperatorMatrix":
        rows = [[zero] * (size + 1) for _ in range(size + 1)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                if 0 <= i <= size:
                    rows[i][j] = v
        return cls(tuple(tuple(r) for r in rows), band)

    @classmethod
    def identity(cls, size: int, one) -> "OperatorMatrix":
        return cls.from_columns([{j: one} for j in range(size + 1)], size, 0 * one, (0, 0))

    def _zero(self):
        return 0 * self.entries[0][0]

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        rows = tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries))
        return OperatorMatrix(rows, (max(self.band[0], other.band[0]), max(self.band[1], other.band[1])))

    def __sub__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        return self + other.scale(-1)

    def scale(self, s) -> "OperatorMatrix":
        return OperatorMatrix(tuple(tuple(s * v for v in r) for r in self.entries), self.band)

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        n = self.size + 1
        zero = self._zero()
        out = [[zero] * n for _ in range(n)]
        a, b = self.entries, other.entries
        for k in range(n):
            row_k = b[k]
            for i in range(n):
                aik = a[i][k]
                if aik == 0:
                    continue
                out_i = out[i]
                for j in range(n):
                    if row_k[j] != 0:
                        out_i[j] += aik * row_k[j]
        band = (self.band[0] + other.band[0], self.band[1] + other.band[1])
        return OperatorMatrix(tuple(tuple(r) for r in out), band)

    def column(self, j: int) -> List[Scalar]:
        return [r[j] for r in self.entries]

    def apply(self, p: Polynomial) -> Polynomial:
        """Image of a polynomial of degree <= size (components past ``size`` are dropped)."""
        if p.degree > self.size:
            raise ValueError(f"degree {p.degree} exceeds the represented size {self.size}")
        out = [self._zero()] * (self.size + 1)
        for j, v in enumerate(p.coeffs):
            for i in range(self.size + 1):
                out[i] += self.entries[i][j] * v
        return Polynomial(out)

    def max_abs_on_columns(self, last: int):
        """Largest |entry| in columns 0..last."""
        return max((abs(r[j]) for r in self.entries for j in range(last + 1)), default=self._zero())


def omegas(params: FamilyParams) -> Tuple[Scalar, Scalar, Scalar]:
    a, b, c = params.as_tuple()
    return -4 * c, 4 * (a - b * c), 2 * (b - a * c)


def op_X(params: FamilyParams, d: int) -> OperatorMatrix:
    if d < 0:
        raise ValueError("d must be >= 0")
    shift = params.alpha + params.beta + 1
    L = l0_matrix(params, max(d, 1))
    cols = []
    for n in range(d + 1):
        col = {n: L.xi[n] + shift}
        if n >= 1:
            col[n - 1] = L.eta[n]
        if n >= 2:
            col[n - 2] = L.zeta[n]
        cols.append(col)
    return OperatorMatrix.from_columns(cols, d, 0 * shift, (2, 0))


def op_Y(d: int, one=None) -> OperatorMatrix:
    if d < 0:
        raise ValueError("d must be >= 0")
    one = as_scalar(1) if one is None else one
    return OperatorMatrix.from_columns([{n + 1: one} for n in range(d + 1)], d, 0 * one, (0, 1))


def z_action(params: FamilyParams, n: int) -> dict:
    """Z x^n as {power: coefficient}."""
    c = params.c
    if n % 2 == 0:
        return {n + 1: -2 * params.one(), n: -2 * (c - 1)}
    return {n + 1: 2 * params.one(), n: 2 * (c - 1), n - 1: -4 * c}


def z_pointwise(params: FamilyParams, p: Polynomial, x0) -> Scalar:
    """-(2/x0)(c p(x0) + (x0-1)(x0+c) p(-x0)) for x0 != 0."""
    x0 = as_scalar(x0)
    if x0 == 0:
        raise ValueError("the defining form of Z is singular at x = 0")
    c = params.c
    return -2 * (c * p(x0) + (x0 - 1) * (x0 + c) * p(-x0)) / x0


def op_Z(params: FamilyParams, d: int) -> OperatorMatrix:
    if d < 0:
        raise ValueError("d must be >= 0")
    cols = [z_action(params, n) for n in range(d + 1)]
    return OperatorMatrix.from_columns(cols, d, 0 * params.c, (1, 1))


def _operators(params: FamilyParams, d: int):
    size = d + 2
    return op_X(params, size), op_Y(size, params.one()), op_Z(params, size), size


def verify_anticommutators(params: FamilyParams, d: int) -> VerificationReport:
    """The three relations on polynomials of degree <= d."""
    if d < 2:
        raise ValueError("d must be >= 2")
    X, Y, Z, size = _operators(params, d)
    I = OperatorMatrix.identity(size, params.one())
    w1, w2, w3 = omegas(params)
    residuals = {
        "XY+YX-Z-w3": X @ Y + Y @ X - Z - I.scale(w3),
        "YZ+ZY-w1": Y @ Z + Z @ Y - I.scale(w1),
        "ZX+XZ-4Y-w2": Z @ X + X @ Z - Y.scale(4) - I.scale(w2),
    }
    errs = {k: m.max_abs_on_columns(d) for k, m in residuals.items()}
    worst = max(errs.values())
    tol = 0 if params.exact else 1e-10
    return VerificationReport("algebra-anticommutators", params, (0, d), worst, tol, bool(worst <= tol),
                              {"relations": errs, "omega": (w1, w2, w3)})


def casimir(params: FamilyParams, d: int) -> OperatorMatrix:
    """Z^2 + 4Y^2 on polynomials of degree <= d + 2 (exact on degree <= d)."""
    _, Y, Z, _ = _operators(params, d)
    return Z @ Z + (Y @ Y).scale(4)


def verify_casimir(params: FamilyParams, d: int) -> VerificationReport:
    """Z^2 + 4Y^2 = 4(c^2+1) on degree <= d; [Q, X] = [Q, Y] = 0 on degree <= d - 3."""
    if d < 2:
        raise ValueError("d must be >= 2")
    X, Y, Z, size = _operators(params, d)
    Q = Z @ Z + (Y @ Y).scale(4)
    value = 4 * (params.c ** 2 + 1)
    I = OperatorMatrix.identity(size, params.one())
    err_q = (Q - I.scale(value)).max_abs_on_columns(d)
    errs = {"Q-4(c^2+1)": err_q}
    if d >= 3:
        errs["[Q,X]"] = (Q @ X - X @ Q).max_abs_on_columns(d - 3)
        errs["[Q,Y]"] = (Q @ Y - Y @ Q).max_abs_on_columns(d - 3)
    worst = max(errs.values())
    tol = 0 if params.exact else 1e-10
    return VerificationReport("algebra-casimir", params, (0, d), worst, tol, bool(worst <= tol),
                              {"relations": errs, "value": value})


def dual_matrices(params: FamilyParams, M: int) -> Tuple[OperatorMatrix, OperatorMatrix]:
    """X = diag(lambda_n + alpha + beta + 1) and Y e_n = u_{n+1} e_{n+1} + b_n e_n + e_{n-1}, n < M."""
    rec = recurrence_coeffs(params, M)
    shift = params.alpha + params.beta + 1
    zero = 0 * shift
    X = OperatorMatrix.from_columns([{n: eigenvalue_lambda(n, params) + shift} for n in range(M)], M - 1, zero, (0, 0))
    cols = []
    for n in range(M):
        col = {n + 1: rec.u[n + 1], n: rec.b[n]}
        if n >= 1:
            col[n - 1] = params.one()
        cols.append(col)
    Y = OperatorMatrix.from_columns(cols, M - 1, zero, (1, 1))
    return X, Y


def dual_realization(params: FamilyParams, M: int) -> VerificationReport:
    """Remaining two relations for Z := XY + YX - w3 on the columns e_0..e_{M-3}."""
    if M < 4:
        raise ValueError("M must be >= 4")
    X, Y = dual_matrices(params, M)
    I = OperatorMatrix.identity(M - 1, params.one())
    w1, w2, w3 = omegas(params)
    Z = X @ Y + Y @ X - I.scale(w3)
    last = M - 3
    errs = {
        "YZ+ZY-w1": (Y @ Z + Z @ Y - I.scale(w1)).max_abs_on_columns(last),
        "ZX+XZ-4Y-w2": (Z @ X + X @ Z - Y.scale(4) - I.scale(w2)).max_abs_on_columns(last),
    }
    worst = max(errs.values())
    tol = 0 if params.exact else 1e-10
    return VerificationReport("algebra-dual", params, (0, last), worst, tol, bool(worst <= tol),
                              {"relations": errs, "excluded_columns": [M - 2, M - 1]})

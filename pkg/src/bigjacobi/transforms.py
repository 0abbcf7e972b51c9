"""
Christoffel and Geronimus transforms, the x -> x^2 interleaving built on
them, and the shifted-Jacobi instance that links to the big -1 family.

The generic layer works on any monic family given by its polynomials and
three-term data; ``nu`` is an arbitrary scalar.  All identities are checked
exactly when the inputs are rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .bigm1 import generate, hyp_2f1_terminating, polys_from_recurrence
from .dunkl import FamilyParams
from .errors import DegenerateDenominatorError, InconsistencyError, ZeroAtNodeError
from .numeric import EXACT, Polynomial, Scalar, as_scalar, pochhammer, scalar_kind


def recurrence_from_polys(polys: Sequence[Polynomial]) -> Tuple[list, list]:
    """Read (u, b) off a monic family, verifying the three-term form exactly.

    Returns ``u`` (with a leading placeholder zero) and ``b`` of length
    ``len(polys) - 1``.
    """
    if not polys:
        return [], []
    kind = polys[0].kind
    zero = Fraction(0) if kind == EXACT else 0.0
    x = Polynomial.x(kind)
    us, bs = [zero], []
    for n, p in enumerate(polys):
        if p.degree != n or not p.is_monic():
            raise InconsistencyError(f"polynomial {n} is not monic of degree {n}")
    for n in range(len(polys) - 1):
        rest = x * polys[n] - polys[n + 1]
        b_n = rest.coeff(n)
        rest = rest - polys[n].scale(b_n)
        if n >= 1:
            u_n = rest.coeff(n - 1)
            rest = rest - polys[n - 1].scale(u_n)
            us.append(u_n)
        if not rest.is_zero():
            raise InconsistencyError(f"family violates the three-term recurrence at n={n}")
        bs.append(b_n)
    return us, bs


@dataclass(frozen=True)
class MonicOPS:
    """Monic family with x P_n = P_{n+1} + b_n P_n + u_n P_{n-1}.

    ``u[0]`` is a placeholder; ``b`` and ``u`` are stored for n < len(polys) - 1.
    """

    polys: tuple
    u: tuple
    b: tuple

    @classmethod
    def from_polys(cls, polys: Sequence[Polynomial]) -> "MonicOPS":
        us, bs = recurrence_from_polys(polys)
        for n, u_n in enumerate(us[1:], start=1):
            if u_n == 0:
                raise InconsistencyError(f"u_{n} = 0: degenerate family")
        return cls(tuple(polys), tuple(us), tuple(bs))

    @classmethod
    def from_recurrence(cls, u: Sequence, b: Sequence, n_max: int, kind: str = EXACT) -> "MonicOPS":
        return cls.from_polys(polys_from_recurrence(u, b, n_max, kind))

    @property
    def n_max(self) -> int:
        return len(self.polys) - 1

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, n: int) -> Polynomial:
        return self.polys[n]


def christoffel(ops: MonicOPS, nu2) -> Tuple[MonicOPS, List[Scalar]]:
    """Kernel polynomials Q_n = (P_{n+1} - A_n P_n) / (x - nu2), A_n = P_{n+1}(nu2) / P_n(nu2)."""
    nu2 = as_scalar(nu2)
    values = [p(nu2) for p in ops.polys]
    A, Q = [], []
    for n in range(ops.n_max):
        if values[n] == 0:
            raise ZeroAtNodeError(f"P_{n}({nu2}) = 0")
        A_n = values[n + 1] / values[n]
        quotient, remainder = (ops[n + 1] - ops[n].scale(A_n)).divmod_linear(nu2)
        if remainder != 0:
            raise InconsistencyError(f"nonzero remainder {remainder} in the kernel quotient at n={n}")
        A.append(A_n)
        Q.append(quotient)
    return MonicOPS.from_polys(Q), A


def geronimus_coefficients(ops: MonicOPS, A: Sequence) -> List[Scalar]:
    """B_n = u_n / A_{n-1}, with B_0 = 0."""
    zero = 0 * A[0] if A else Fraction(0)
    return [zero] + [ops.u[n] / A[n - 1] for n in range(1, min(len(ops.u), len(A) + 1))]


def geronimus_reconstruct(Q: MonicOPS, B: Sequence, nu2) -> MonicOPS:
    """Rebuild P_n = Q_n - B_n Q_{n-1} and verify u_n = B_n A_{n-1}, b_n = nu2 - A_n - B_n."""
    nu2 = as_scalar(nu2)
    m = min(Q.n_max, len(B) - 1)
    polys = [Q[0]] + [Q[n] - Q[n - 1].scale(B[n]) for n in range(1, m + 1)]
    P = MonicOPS.from_polys(polys)
    values = [p(nu2) for p in P.polys]
    A = []
    for n in range(P.n_max):
        if values[n] == 0:
            raise ZeroAtNodeError(f"P_{n}({nu2}) = 0")
        A.append(values[n + 1] / values[n])
    for n in range(P.n_max):
        if P.b[n] != nu2 - A[n] - B[n]:
            raise InconsistencyError(f"b_{n} != nu^2 - A_{n} - B_{n}")
        if n >= 1 and P.u[n] != B[n] * A[n - 1]:
            raise InconsistencyError(f"u_{n} != B_{n} A_{n - 1}")
    return P


@dataclass(frozen=True)
class InterleavedOPS:
    """R_{2n}(x) = P_n(x^2), R_{2n+1}(x) = (x - nu) Q_n(x^2).

    ``v[0]`` is a placeholder; x R_n = R_{n+1} + (-1)^n nu R_n + v_n R_{n-1}.
    """

    R: tuple
    nu: Scalar
    v: tuple

    def recurrence_residual(self, n: int) -> Polynomial:
        x = Polynomial.x(self.R[0].kind)
        sign = 1 if n % 2 == 0 else -1
        lhs = self.R[n + 1] + self.R[n].scale(sign * self.nu)
        if n >= 1:
            lhs = lhs + self.R[n - 1].scale(self.v[n])
        return lhs - x * self.R[n]


def interleave(P: MonicOPS, Q: MonicOPS, nu) -> InterleavedOPS:
    nu = as_scalar(nu)
    nu2 = nu * nu
    kind = P[0].kind
    x = Polynomial.x(kind)
    m = min(P.n_max, Q.n_max + 1)
    A = [P[n + 1](nu2) / P[n](nu2) for n in range(m)]
    for n in range(min(m, Q.n_max + 1)):
        if (x - nu2) * Q[n] != P[n + 1] - P[n].scale(A[n]):
            raise InconsistencyError(f"Q_{n} is not the Christoffel transform of P at nu^2")
    B = geronimus_coefficients(P, A)
    R: List[Polynomial] = []
    for n in range(m + 1):
        R.append(P[n].compose_square())
        if n < m:
            R.append((x - nu) * Q[n].compose_square())
    v = [0 * nu]
    for k in range(1, len(R) - 1):
        v.append(-B[k // 2] if k % 2 == 0 else -A[k // 2])
    out = InterleavedOPS(tuple(R), nu, tuple(v))
    for n in range(len(R) - 1):
        if not out.recurrence_residual(n).is_zero():
            raise InconsistencyError(f"interleaved recurrence fails at n={n}")
    return out


def derived_recurrence_residuals(R: InterleavedOPS, P: MonicOPS, Q: MonicOPS) -> List[Scalar]:
    """Differences between the P and Q recurrence data and their v-expressions.

    P: b_n = v_{2n} + v_{2n+1} + nu^2,   u_n = v_{2n} v_{2n-1}
    Q: b_n = v_{2n+2} + v_{2n+1} + nu^2, u_n = v_{2n} v_{2n+1}
    """
    v, nu2 = R.v, R.nu * R.nu
    out = []
    for n in range(len(P.b)):
        if 2 * n + 1 < len(v):
            vv = v[2 * n] if n else 0 * nu2
            out.append(P.b[n] - (vv + v[2 * n + 1] + nu2))
        if n >= 1 and 2 * n < len(v):
            out.append(P.u[n] - v[2 * n] * v[2 * n - 1])
    for n in range(len(Q.b)):
        if 2 * n + 2 < len(v):
            out.append(Q.b[n] - (v[2 * n + 2] + v[2 * n + 1] + nu2))
        if n >= 1 and 2 * n + 1 < len(v):
            out.append(Q.u[n] - v[2 * n] * v[2 * n + 1])
    return out


def functional_moments(u: Sequence, b: Sequence, count: int) -> List[Scalar]:
    """Moments L[x^k], k < count, of the functional with L[1] = 1, L[P_n] = 0 (n >= 1).

    Expands x^k in the P basis through x P_n = P_{n+1} + b_n P_n + u_n P_{n-1}.
    """
    if count > len(b) + 1:
        raise ValueError(f"need recurrence data up to index {count - 2}")
    one = Fraction(1) if scalar_kind(b[0]) == EXACT else 1.0
    expansion = [one]
    moments = [one]
    for _ in range(1, count):
        nxt = [0 * one] * (len(expansion) + 1)
        for n, a in enumerate(expansion):
            nxt[n + 1] += a
            nxt[n] += a * b[n]
            if n >= 1:
                nxt[n - 1] += a * u[n]
        expansion = nxt
        moments.append(expansion[0])
    return moments


def moments_interleaved(R: InterleavedOPS, c_moments: Sequence) -> Tuple[List[Scalar], List[Scalar]]:
    """R-moments r_{2n} = c_n, r_{2n+1} = nu c_n and Q-moments (c_{n+1} - nu^2 c_n) / (c_1 - nu^2)."""
    nu = R.nu
    nu2 = nu * nu
    r = []
    for c_n in c_moments:
        r.extend([c_n, nu * c_n])
    denom = c_moments[1] - nu2
    if denom == 0:
        raise DegenerateDenominatorError("c_1 = nu^2: the Christoffel transform is degenerate")
    tc = [(c_moments[n + 1] - nu2 * c_moments[n]) / denom for n in range(len(c_moments) - 1)]
    return r, tc


# Shifted Jacobi instance on [c^2, 1]

def jacobi_P_at_one(xi, eta, c, n: int) -> Scalar:
    return (1 - c * c) ** n * pochhammer(xi + 1, n) / pochhammer(n + xi + eta + 1, n)


def jacobi_A(xi, eta, c, n: int) -> Scalar:
    return (1 - c * c) * (xi + n + 1) * (xi + eta + n + 1) / ((2 * n + xi + eta + 1) * (2 * n + xi + eta + 2))


def jacobi_B(xi, eta, c, n: int) -> Scalar:
    return (1 - c * c) * n * (eta + n) / ((2 * n + xi + eta) * (2 * n + xi + eta + 1))


def _shifted_jacobi(xi, eta, c, n: int) -> Polynomial:
    one = Fraction(1) if scalar_kind(c) == EXACT else 1.0
    z = Polynomial([one, -one]) / (1 - c * c)
    series = hyp_2f1_terminating(n, n + xi + eta + 1, xi + 1, z)
    if not isinstance(series, Polynomial):
        series = Polynomial([series])
    return series.scale(jacobi_P_at_one(xi, eta, c, n))


def jacobi_shifted_family(xi, eta_j, c, n_max: int) -> MonicOPS:
    """Monic Jacobi polynomials orthogonal for (1-x)^xi (x-c^2)^eta on [c^2, 1]."""
    xi, eta_j, c = as_scalar(xi), as_scalar(eta_j), as_scalar(c)
    return MonicOPS.from_polys([_shifted_jacobi(xi, eta_j, c, n) for n in range(n_max + 1)])


def jacobi_shifted_companion(xi, eta_j, c, n_max: int) -> MonicOPS:
    """Kernel partner: the same family with xi -> xi + 1."""
    xi = as_scalar(xi)
    return jacobi_shifted_family(xi + 1, eta_j, c, n_max)


def jacobi_interleaved(xi, eta_j, c, n_max: int) -> Tuple[InterleavedOPS, MonicOPS, MonicOPS]:
    """R_0..R_{n_max} for the Jacobi pair with nu = 1."""
    m = n_max // 2 + 1
    P = jacobi_shifted_family(xi, eta_j, c, m)
    Q = jacobi_shifted_companion(xi, eta_j, c, m)
    one = Fraction(1) if scalar_kind(as_scalar(c)) == EXACT else 1.0
    return interleave(P, Q, one), P, Q


def G_coefficient(params: FamilyParams, n: int) -> Scalar:
    a, b, c = params.as_tuple()
    if n % 2 == 0:
        return (1 - c) * n / (2 * n + a + b) if n else 0 * c
    return -(1 + c) * (n + a) / (2 * n + a + b)


@dataclass(frozen=True)
class GeronimusLink:
    G: tuple
    mu: Scalar
    mu_values: tuple
    R: InterleavedOPS


def geronimus_link_details(params: FamilyParams, n_max: int) -> GeronimusLink:
    a, b, c = params.as_tuple()
    xi, eta = (a - 1) / 2, (b + 1) / 2
    R, _, _ = jacobi_interleaved(xi, eta, c, n_max + 1)
    family = generate(params, n_max)
    G = [G_coefficient(params, n) for n in range(n_max + 2)]
    for n in range(n_max + 1):
        rhs = R.R[n] - (R.R[n - 1].scale(G[n]) if n else Polynomial.zero(params.kind))
        if family[n] != rhs:
            raise InconsistencyError(f"P_{n} != R_{n} - G_{n} R_{n - 1}")
    mus = []
    for n in range(1, n_max + 1):
        sign = 1 if n % 2 == 0 else -1
        mus.append(G[n + 1] + sign + R.v[n] / G[n])
    if any(m != mus[0] for m in mus):
        raise InconsistencyError(f"mu is not constant in n: {mus}")
    mu = mus[0] if mus else -c
    if mu != -c:
        raise InconsistencyError(f"mu = {mu}, expected -c = {-c}")
    return GeronimusLink(tuple(G[: n_max + 1]), mu, tuple(mus), R)


def geronimus_link(params: FamilyParams, n_max: int) -> Tuple[tuple, Scalar]:
    """(G_0..G_n_max, mu) after verifying P_n = R_n - G_n R_{n-1} and constancy of mu."""
    link = geronimus_link_details(params, n_max)
    return link.G, link.mu

"""
Scalars and dense univariate polynomials.

Two scalar kinds are supported: exact rationals (``fractions.Fraction``,
with ``int`` promoted on entry) and IEEE doubles (``float`` or numpy
float arrays at evaluation time).  A polynomial carries exactly one kind;
combining an exact polynomial with a float raises ``ScalarKindError``
instead of silently degrading to floating point.  Use ``to_float`` to
cross over explicitly.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Tuple, Union

import numpy as np

from .errors import ScalarKindError

Scalar = Union[Fraction, float]

EXACT = "exact"
FLOAT = "float"


def scalar_kind(value) -> str:
    if isinstance(value, bool):
        raise ScalarKindError("booleans are not scalars")
    if isinstance(value, Rational):
        return EXACT
    if isinstance(value, (float, np.floating, np.ndarray)):
        return FLOAT
    raise ScalarKindError(f"unsupported scalar type {type(value).__name__}")


def as_scalar(value) -> Scalar:
    """Normalise ``value`` to a Fraction or a float.

    Strings are parsed as exact rationals (``"3/4"``, ``"-2"``).
    """
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, bool):
        raise ScalarKindError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, (float, np.floating)):
        return float(value)
    raise ScalarKindError(f"unsupported scalar type {type(value).__name__}")


def format_scalar(value: Scalar) -> str:
    """Render a scalar; exact values as ``p/q`` strings, floats via repr."""
    if isinstance(value, Fraction):
        return str(value)
    return repr(float(value))


def pochhammer(z: Scalar, k: int) -> Scalar:
    """Rising factorial (z)_k = z (z+1) ... (z+k-1)."""
    out = Fraction(1) if scalar_kind(z) == EXACT else 1.0
    for i in range(k):
        out *= z + i
    return out


class Polynomial:
    """Immutable dense polynomial, ``coeffs[i]`` multiplies ``x**i``.

    Trailing zeros are stripped on construction, so the zero polynomial has
    an empty coefficient tuple and degree -1.
    """

    __slots__ = ("_coeffs", "_kind")

    def __init__(self, coeffs: Iterable = (), kind: str | None = None):
        cs = [as_scalar(c) for c in coeffs]
        kinds = {scalar_kind(c) for c in cs}
        if len(kinds) > 1:
            raise ScalarKindError("polynomial mixes exact and float coefficients")
        if kinds:
            found = kinds.pop()
            if kind is not None and kind != found:
                raise ScalarKindError(f"expected {kind} coefficients, got {found}")
            kind = found
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: Tuple[Scalar, ...] = tuple(cs)
        self._kind = kind or EXACT

    # construction helpers
    @classmethod
    def constant(cls, value, kind: str | None = None) -> "Polynomial":
        return cls([value], kind=kind)

    @classmethod
    def x(cls, kind: str = EXACT) -> "Polynomial":
        one = Fraction(1) if kind == EXACT else 1.0
        return cls([0 * one, one])

    @classmethod
    def monomial(cls, n: int, coeff=1) -> "Polynomial":
        coeff = as_scalar(coeff)
        return cls([0 * coeff] * n + [coeff])

    @classmethod
    def zero(cls, kind: str = EXACT) -> "Polynomial":
        return cls((), kind=kind)

    # basic attributes
    @property
    def coeffs(self) -> Tuple[Scalar, ...]:
        return self._coeffs

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Scalar:
        if not self._coeffs:
            return self._zero()
        return self._coeffs[-1]

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == 1

    def coeff(self, i: int) -> Scalar:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return self._zero()

    def _zero(self) -> Scalar:
        return Fraction(0) if self._kind == EXACT else 0.0

    def _check(self, other_kind: str) -> None:
        if self._coeffs and other_kind != self._kind:
            raise ScalarKindError(f"cannot combine {self._kind} polynomial with {other_kind} operand")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if self._coeffs and other._coeffs and other._kind != self._kind:
                raise ScalarKindError(f"cannot combine {self._kind} and {other._kind} polynomials")
            return other
        value = as_scalar(other)
        self._check(scalar_kind(value))
        return Polynomial([value])

    # ring operations
    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return Polynomial(out, kind=self._kind if self._coeffs else other._kind)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-v for v in self._coeffs], kind=self._kind)

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        a, b = self._coeffs, other._coeffs
        kind = self._kind if a else other._kind
        if not a or not b:
            return Polynomial((), kind=kind)
        out = [0 * a[0]] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Polynomial(out, kind=kind)

    def __rmul__(self, other) -> "Polynomial":
        return self.scale(other)

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = Polynomial.constant(1, kind=self._kind) if self._kind == EXACT else Polynomial([1.0])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, factor) -> "Polynomial":
        factor = as_scalar(factor)
        self._check(scalar_kind(factor))
        return Polynomial([factor * v for v in self._coeffs], kind=self._kind)

    def __truediv__(self, factor) -> "Polynomial":
        factor = as_scalar(factor)
        self._check(scalar_kind(factor))
        return Polynomial([v / factor for v in self._coeffs], kind=self._kind)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        try:
            return self._coeffs == Polynomial([other])._coeffs
        except ScalarKindError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    # evaluation and calculus
    def __call__(self, x):
        return eval_poly(self, x)

    def reflect(self) -> "Polynomial":
        """Return p(-x)."""
        return Polynomial([-v if i % 2 else v for i, v in enumerate(self._coeffs)], kind=self._kind)

    def derivative(self) -> "Polynomial":
        return Polynomial([i * v for i, v in enumerate(self._coeffs)][1:], kind=self._kind)

    def compose_square(self) -> "Polynomial":
        """Return p(x**2)."""
        out = []
        for v in self._coeffs:
            out.extend([v, 0 * v])
        return Polynomial(out, kind=self._kind)

    def divmod_linear(self, a) -> Tuple["Polynomial", Scalar]:
        """Divide by ``(x - a)``; returns ``(quotient, remainder)``.

        Synthetic division, so the remainder equals ``p(a)``.
        """
        a = as_scalar(a)
        self._check(scalar_kind(a))
        if not self._coeffs:
            return Polynomial((), kind=self._kind), self._zero()
        acc = self._zero()
        quotient = []
        for v in reversed(self._coeffs):
            acc = acc * a + v
            quotient.append(acc)
        remainder = quotient.pop()
        return Polynomial(reversed(quotient), kind=self._kind), remainder

    def to_float(self) -> "Polynomial":
        return Polynomial([float(v) for v in self._coeffs], kind=FLOAT)

    def even_odd_parts(self) -> Tuple["Polynomial", "Polynomial"]:
        """Split p(x) = E(x**2) + x O(x**2); returns (E, O)."""
        return (
            Polynomial(self._coeffs[0::2], kind=self._kind),
            Polynomial(self._coeffs[1::2], kind=self._kind),
        )

    def __repr__(self) -> str:
        return f"Polynomial({[format_scalar(v) for v in self._coeffs]})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for i in range(len(self._coeffs) - 1, -1, -1):
            v = self._coeffs[i]
            if v == 0:
                continue
            sign = "-" if v < 0 else "+"
            mag = -v if v < 0 else v
            if i == 0:
                body = format_scalar(mag)
            else:
                power = "x" if i == 1 else f"x^{i}"
                body = power if mag == 1 else f"{format_scalar(mag)}*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def eval_poly(p: Polynomial, x):
    """Horner evaluation.  Exact when both ``p`` and ``x`` are rational."""
    if isinstance(x, np.ndarray):
        if p.kind == EXACT and p.coeffs:
            raise ScalarKindError("evaluate an exact polynomial at float points via to_float()")
        out = np.zeros_like(x, dtype=float)
        for v in reversed(p.coeffs):
            out = out * x + v
        return out
    x = as_scalar(x)
    if p.coeffs and scalar_kind(x) != p.kind:
        raise ScalarKindError(f"cannot evaluate {p.kind} polynomial at a {scalar_kind(x)} point")
    acc = Fraction(0) if scalar_kind(x) == EXACT else 0.0
    for v in reversed(p.coeffs):
        acc = acc * x + v
    return acc


def reflect(p: Polynomial) -> Polynomial:
    return p.reflect()


def differentiate(p: Polynomial) -> Polynomial:
    return p.derivative()


def divide_linear(p: Polynomial, a) -> Tuple[Polynomial, Scalar]:
    return p.divmod_linear(a)


def poly_from_coeffs(coeffs: Sequence) -> Polynomial:
    return Polynomial(coeffs)


def max_abs_coeff(p: Polynomial) -> Scalar:
    """Largest coefficient magnitude; exact zero for the zero polynomial."""
    if p.is_zero():
        return Fraction(0) if p.kind == EXACT else 0.0
    return max(abs(v) for v in p.coeffs)

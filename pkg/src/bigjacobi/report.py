"""Uniform pass/fail records shared by the verification routines and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from .dunkl import FamilyParams
from .numeric import format_scalar


@dataclass(frozen=True)
class VerificationReport:
    check: str
    params: Optional[FamilyParams]
    n_range: Tuple[int, int]
    max_abs_error: Any
    tolerance: float
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready mapping; exact errors are rendered as "p/q" strings."""
        p = self.params
        params = None if p is None else {
            "alpha": format_scalar(p.alpha),
            "beta": format_scalar(p.beta),
            "c": format_scalar(p.c),
        }
        err = self.max_abs_error
        err = format_scalar(Fraction(err)) if isinstance(err, (Fraction, int)) else float(err)
        return {
            "check": self.check,
            "params": params,
            "n_range": [int(self.n_range[0]), int(self.n_range[1])],
            "max_abs_error": err,
            "tolerance": self.tolerance,
            "pass": bool(self.passed),
        }


def residual_report(check: str, params: Optional[FamilyParams], n_range, error, tolerance: float = 0.0,
                    **details) -> VerificationReport:
    """Report that passes when ``error <= tolerance`` (exact zero when tolerance is 0)."""
    return VerificationReport(check, params, tuple(n_range), error, tolerance, bool(error <= tolerance), details)

"""
Named verification suites.  Each suite takes a parameter set and an index
bound and returns a list of VerificationReport objects in a fixed order.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from . import awalgebra, bigm1, dunkl, limits, orthogonality, transforms
from .dunkl import FamilyParams
from .errors import BigJacobiError, ParameterError
from .numeric import Polynomial, max_abs_coeff
from .report import VerificationReport, residual_report

EPS_PAIR = (1e-3, 1e-4)
BI_N_LIST = (64, 128, 256)
RATE_TOL = 0.25
U_LIMIT_N = 10
OP_LIMIT_N = 8
BI_LIMIT_N = 8
POINT_MASS_TOL = 1e-10
CONTROL_FLOOR = 1e-2


def _tol(params: FamilyParams, scale: float = 1e-9) -> float:
    return 0 if params.exact else scale


def _exact(params: FamilyParams) -> FamilyParams:
    """Rational copy; floats convert to their exact binary values."""
    if params.exact:
        return params
    return FamilyParams(*(Fraction(v) for v in params.as_tuple()))


def _diff(p: Polynomial, q: Polynomial):
    return max_abs_coeff(p - q)


def check_eigen(params: FamilyParams, n_max: int, **_) -> List[VerificationReport]:
    family = bigm1.generate(params, n_max)
    worst = 0 * params.c
    for n, p in enumerate(family):
        worst = max(worst, _diff(dunkl.apply_L0(params, p), p.scale(dunkl.eigenvalue_lambda(n, params))))
    return [residual_report("eigen", params, (0, n_max), worst, _tol(params))]


def check_triple(params: FamilyParams, n_max: int, **_) -> List[VerificationReport]:
    family = bigm1.generate(params, n_max)
    worst = 0 * params.c
    for n, p in enumerate(family):
        worst = max(worst, _diff(p, bigm1.explicit_form(params, n)), _diff(p, dunkl.pn_via_phi(params, n)))
    return [residual_report("triple-equality", params, (0, n_max), worst, _tol(params))]


def check_ortho(params: FamilyParams, n_max: int, tol_off: Optional[float] = None,
                tol_diag: Optional[float] = None, **_) -> List[VerificationReport]:
    tol_off = orthogonality.DEFAULT_TOL_OFF if tol_off is None else tol_off
    tol_diag = orthogonality.DEFAULT_TOL_DIAG if tol_diag is None else tol_diag
    g = orthogonality.gram_check(params, max(n_max, 1), tol_off, tol_diag)
    n_range = (0, g.n_max)
    return [
        VerificationReport("ortho-offdiag", params, n_range, g.offdiag_max, tol_off,
                           bool(g.offdiag_max < tol_off and g.diag_positive)),
        VerificationReport("ortho-norm-ratio", params, n_range, g.diag_ratio_err, tol_diag,
                           bool(g.diag_ratio_err < tol_diag)),
    ]


def check_point_mass(params: FamilyParams, n_max: int, **_) -> List[VerificationReport]:
    out = []
    exact = _exact(params)
    try:
        link = transforms.geronimus_link_details(exact, max(n_max, 1))
        spread = max(abs(m - link.mu) for m in link.mu_values)
        err = max(spread, abs(link.mu + exact.c))
        out.append(residual_report("mu-recovery", params, (1, max(n_max, 1)), err, 0))
    except BigJacobiError as exc:
        out.append(VerificationReport("mu-recovery", params, (1, max(n_max, 1)), math.inf, 0,
                                      False, {"reason": str(exc)}))
    residual = orthogonality.point_mass_test(params)
    out.append(residual_report("point-mass", params, (1, 1), residual, POINT_MASS_TOL))
    control = orthogonality.point_mass_test(params, mu=float(params.c))
    # the control passes when the wrong node leaves a large residual
    out.append(VerificationReport("point-mass-control", params, (1, 1), control, CONTROL_FLOOR,
                                  bool(control > CONTROL_FLOOR), {"direction": "above"}))
    return out


def check_transforms(params: FamilyParams, n_max: int, **_) -> List[VerificationReport]:
    """Christoffel/Geronimus round trip and interleaving on the shifted Jacobi instance."""
    exact = _exact(params)
    a, b, c = exact.as_tuple()
    xi, eta = (a - 1) / 2, (b + 1) / 2
    tol = 0
    R, P, Q = transforms.jacobi_interleaved(xi, eta, c, max(n_max, 1) + 1)
    Qc, A = transforms.christoffel(P, 1)
    B = transforms.geronimus_coefficients(P, A)
    back = transforms.geronimus_reconstruct(Qc, B, 1)
    rt = max((_diff(x, y) for x, y in zip(back.polys, P.polys)), default=0 * c)
    rt = max([rt] + [_diff(x, y) for x, y in zip(Qc.polys, Q.polys)])
    out = [residual_report("transforms-roundtrip", params, (0, back.n_max), rt, tol)]
    top = min(len(R.R) - 2, n_max)
    res = max(max_abs_coeff(R.recurrence_residual(n)) for n in range(top + 1))
    derived = max(abs(r) for r in transforms.derived_recurrence_residuals(R, P, Q))
    out.append(residual_report("transforms-3term", params, (0, top), max(res, derived), tol))
    # v_n = -A, -B carry the sign of c^2 - 1
    sign = -1 if c < 1 else 1
    wrong = [n for n in range(1, top + 1) if not sign * R.v[n] > 0]
    out.append(VerificationReport("transforms-v-sign", params, (1, top), len(wrong), 0, not wrong,
                                  {"expected_sign": sign}))
    try:
        transforms.geronimus_link_details(exact, n_max)
        out.append(residual_report("transforms-ger-pr", params, (0, n_max), 0 * c, tol))
    except BigJacobiError as exc:
        out.append(VerificationReport("transforms-ger-pr", params, (0, n_max), math.inf, tol, False,
                                      {"reason": str(exc)}))
    return out


def _rate_error(coarse, fine, n_lo: int, target: float):
    ratios = [coarse[n] / fine[n] for n in range(n_lo, len(fine)) if fine[n] != 0]
    err = max((abs(r - target) / target for r in ratios), default=0.0)
    return err, ratios


def check_limit_q(params: FamilyParams, n_max: int, **_) -> List[VerificationReport]:
    e1, e2 = EPS_PAIR
    target = e1 / e2
    nu = min(n_max, U_LIMIT_N)
    no = min(n_max, OP_LIMIT_N)
    err_u, ru = _rate_error(limits.u_limit_errors(params, e1, nu), limits.u_limit_errors(params, e2, nu), 1, target)
    err_l, rl = _rate_error(limits.lq_limit_errors(params, e1, no), limits.lq_limit_errors(params, e2, no), 1, target)
    return [
        VerificationReport("limit-q-u", params, (1, nu), err_u, RATE_TOL, err_u <= RATE_TOL, {"ratios": ru}),
        VerificationReport("limit-q-operator", params, (1, no), err_l, RATE_TOL, err_l <= RATE_TOL, {"ratios": rl}),
    ]


def check_limit_bi(params: FamilyParams, n_max: int, **_) -> List[VerificationReport]:
    n = min(n_max, BI_LIMIT_N)
    conv = limits.bi_convergence(params, n, BI_N_LIST)
    ratios = [float(r) for r in conv.A_ratios]
    err = max(abs(r - 0.5) / 0.5 for r in ratios)
    out = [VerificationReport("limit-bi-rate", params, (0, n), err, RATE_TOL, err <= RATE_TOL,
                              {"A_ratios": ratios, "C_ratios": [float(r) for r in conv.C_ratios]})]
    # grid images: distance to the two intervals and uncovered stretches, both scaled by N+1
    c = float(params.c)
    scaled = 0.0
    for N in BI_N_LIST:
        rep = limits.bi_grid_report(params, N)
        scaled = max(scaled, (N + 1) * max(rep.max_distance, rep.max_gap))
    bound = 2 * (1 + c) * (1 + 1e-9)
    out.append(VerificationReport("limit-bi-grid", params, (min(BI_N_LIST), max(BI_N_LIST)), scaled, bound,
                                  scaled <= bound))
    return out


def check_algebra(params: FamilyParams, n_max: int, **_) -> List[VerificationReport]:
    d = max(n_max, 2)
    return [
        awalgebra.verify_anticommutators(params, d),
        awalgebra.verify_casimir(params, d),
        awalgebra.dual_realization(params, max(n_max, 4)),
    ]


SUITES: Dict[str, Callable[..., List[VerificationReport]]] = {
    "eigen": check_eigen,
    "triple-equality": check_triple,
    "ortho": check_ortho,
    "point-mass": check_point_mass,
    "transforms": check_transforms,
    "limit-q": check_limit_q,
    "limit-bi": check_limit_bi,
    "algebra": check_algebra,
}
CHECK_IDS = tuple(SUITES) + ("all",)


def applicable(check_id: str, params: FamilyParams) -> bool:
    """The Bannai-Ito limit is only set up on the 0 < c < 1 branch."""
    return not (check_id == "limit-bi" and params.c > 1)


def run_suite(check_id: str, params: FamilyParams, n_max: int, **options) -> List[VerificationReport]:
    if check_id not in CHECK_IDS:
        raise ParameterError(f"unknown check {check_id!r}; expected one of {', '.join(CHECK_IDS)}")
    if n_max < 0:
        raise ParameterError("n_max must be >= 0")
    ids = list(SUITES) if check_id == "all" else [check_id]
    out: List[VerificationReport] = []
    for cid in ids:
        if check_id == "all" and not applicable(cid, params):
            continue
        out.extend(SUITES[cid](params, n_max, **options))
    return out


def random_params(rng: random.Random, exact: bool = True) -> FamilyParams:
    """Rational (alpha, beta, c) with small denominators, c kept away from 1."""
    def frac(lo: int, hi: int, den: int) -> Fraction:
        return Fraction(rng.randint(lo * den, hi * den), den)

    alpha = frac(-1, 3, 8)
    while alpha <= -1:
        alpha = frac(-1, 3, 8)
    beta = frac(-1, 3, 8)
    while beta <= -1:
        beta = frac(-1, 3, 8)
    c = frac(0, 3, 8)
    while c <= 0 or c == 1:
        c = frac(0, 3, 8)
    p = FamilyParams(alpha, beta, c)
    return p if exact else p.to_float()


def sweep_params(seed: int, count: int, exact: bool = True) -> List[FamilyParams]:
    rng = random.Random(seed)
    return [random_params(rng, exact) for _ in range(count)]

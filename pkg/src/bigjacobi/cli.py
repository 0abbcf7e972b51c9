"""
Command-line front end.

    bigjacobi check <id> --alpha A --beta B --c C --n-max N [--format json|csv]
    bigjacobi table <kind> --alpha A --beta B --c C --n-max N [--format csv|json]

Parameters are parsed as exact rationals ("1/2", "0.25", "3").  ``check``
exits 0 only when every executed check passes; invalid input produces a
structured error object and exit status 2.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence

from . import bigm1, limits
from .dunkl import FamilyParams
from .errors import BigJacobiError, DomainError, ParameterError
from .numeric import format_scalar
from .report import VerificationReport
from .suites import CHECK_IDS, applicable, run_suite, sweep_params

TABLE_KINDS = ("coeffs", "polys", "weight-samples", "bi-coeffs", "q-sweep")
EXIT_FAIL = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of printing and exiting."""

    def error(self, message):
        raise ParameterError(message)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParameterError(f"not a rational number: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bigjacobi", description="Verification and tables for big -1 Jacobi polynomials.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, n_default):
        p.add_argument("--alpha", type=_rational, required=True)
        p.add_argument("--beta", type=_rational, required=True)
        p.add_argument("--c", type=_rational, required=True)
        p.add_argument("--n-max", type=int, default=n_default)

    chk = sub.add_parser("check", help="run a verification suite")
    chk.add_argument("id", help=" | ".join(CHECK_IDS))
    common(chk, 12)
    chk.add_argument("--tol-off", type=float)
    chk.add_argument("--tol-diag", type=float)
    chk.add_argument("--format", choices=("json", "csv"), default="json")
    chk.add_argument("--seed", type=int, help="also run on random rational parameter sets drawn from this seed")
    chk.add_argument("--sweep-count", type=int, default=3)

    tab = sub.add_parser("table", help="emit a data table")
    tab.add_argument("kind", help=" | ".join(TABLE_KINDS))
    common(tab, 10)
    tab.add_argument("--format", choices=("json", "csv"), default="csv")
    tab.add_argument("--x", type=_rational, action="append", help="sample point for weight-samples (repeatable)")
    tab.add_argument("--points", type=int, default=8, help="interior points per interval for weight-samples")
    tab.add_argument("--N", type=int, default=64, help="Bannai-Ito size for bi-coeffs")
    tab.add_argument("--eps", type=float, action="append", help="eps values for q-sweep (repeatable)")
    return parser


def _params(ns) -> FamilyParams:
    return FamilyParams(ns.alpha, ns.beta, ns.c)


# output helpers

REPORT_FIELDS = ("check", "alpha", "beta", "c", "n_lo", "n_hi", "max_abs_error", "tolerance", "pass")


def _report_rows(reports: Sequence[VerificationReport]) -> List[dict]:
    rows = []
    for r in reports:
        d = r.to_dict()
        p = d["params"] or {"alpha": "", "beta": "", "c": ""}
        rows.append({
            "check": d["check"], "alpha": p["alpha"], "beta": p["beta"], "c": p["c"],
            "n_lo": d["n_range"][0], "n_hi": d["n_range"][1],
            "max_abs_error": d["max_abs_error"], "tolerance": d["tolerance"],
            "pass": "true" if d["pass"] else "false",
        })
    return rows


def _write_csv(out, fields: Sequence[str], rows: Iterable[dict]) -> None:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n")
    w.writeheader()
    for row in rows:
        w.writerow(row)
    out.write(buf.getvalue())


def _write_json_lines(out, objects: Iterable[dict]) -> None:
    for obj in objects:
        out.write(json.dumps(obj, sort_keys=False) + "\n")


def _error_object(exc: Exception) -> dict:
    return {"error": {"type": type(exc).__name__, "message": str(exc)}}


# commands

def cmd_check(ns, out) -> int:
    if ns.id not in CHECK_IDS:
        raise ParameterError(f"unknown check {ns.id!r}; expected one of {', '.join(CHECK_IDS)}")
    params = _params(ns)
    if ns.id != "all" and not applicable(ns.id, params):
        raise ParameterError(f"check {ns.id!r} requires 0 < c < 1")
    options = {"tol_off": ns.tol_off, "tol_diag": ns.tol_diag}
    param_sets = [params]
    if ns.seed is not None:
        if ns.sweep_count < 1:
            raise ParameterError("--sweep-count must be >= 1")
        extra = sweep_params(ns.seed, ns.sweep_count)
        param_sets += [p for p in extra if ns.id == "all" or applicable(ns.id, p)]
    reports: List[VerificationReport] = []
    for p in param_sets:
        reports.extend(run_suite(ns.id, p, ns.n_max, **options))
    if ns.format == "csv":
        _write_csv(out, REPORT_FIELDS, _report_rows(reports))
    else:
        _write_json_lines(out, (r.to_dict() for r in reports))
    return 0 if all(r.passed for r in reports) else EXIT_FAIL


def _table_coeffs(params, ns):
    rec = bigm1.recurrence_coeffs(params, ns.n_max)
    fields = ("n", "u_n", "b_n", "u_n_float", "b_n_float")
    rows = []
    for n in range(ns.n_max + 1):
        u = rec.u[n] if n else None
        rows.append({
            "n": n,
            "u_n": "" if u is None else format_scalar(u),
            "b_n": format_scalar(rec.b[n]),
            "u_n_float": "" if u is None else repr(float(u)),
            "b_n_float": repr(float(rec.b[n])),
        })
    return fields, rows


def _table_polys(params, ns):
    fields = ("n", "poly", "coeffs")
    rows = [{"n": n, "poly": str(p), "coeffs": " ".join(format_scalar(v) for v in p.coeffs)}
            for n, p in enumerate(bigm1.generate(params, ns.n_max))]
    return fields, rows


def _table_weight(params, ns):
    spec = bigm1.WeightSpec.of(params)
    if ns.x:
        xs = list(ns.x)
        for x in xs:
            if not spec.contains(float(x)):
                raise DomainError(f"x = {x} is outside the open support {spec.support}")
    else:
        if ns.points < 1:
            raise ParameterError("--points must be >= 1")
        xs = []
        for lo, hi in spec.support:
            lo_f, hi_f = Fraction(lo), Fraction(hi)
            step = (hi_f - lo_f) / (ns.points + 1)
            xs += [lo_f + step * k for k in range(1, ns.points + 1)]
    fields = ("x", "x_float", "w")
    rows = [{"x": format_scalar(Fraction(x)), "x_float": repr(float(x)), "w": repr(bigm1.weight(params, float(x)))}
            for x in xs]
    return fields, rows


def _table_bi(params, ns):
    if ns.N <= 2 * ns.n_max:
        raise ParameterError("--N must exceed 2 n_max")
    bp = limits.bi_limit_params(params, ns.N)
    fields = ("n", "A_n", "C_n", "A_lim", "C_lim", "A_err_float", "C_err_float")
    rows = []
    for n in range(ns.n_max + 1):
        A, C = limits.bannai_ito_AC(bp, n)
        A0, C0 = bigm1.limit_AC(params, n)
        rows.append({"n": n, "A_n": format_scalar(A), "C_n": format_scalar(C),
                     "A_lim": format_scalar(A0), "C_lim": format_scalar(C0),
                     "A_err_float": repr(float(abs(A - A0))), "C_err_float": repr(float(abs(C - C0)))})
    return fields, rows


def _table_q(params, ns):
    eps_list = ns.eps or [1e-2, 1e-3, 1e-4]
    if any(not e > 0 for e in eps_list):
        raise ParameterError("eps values must be positive")
    if ns.n_max < 1:
        raise ParameterError("n_max must be >= 1 for q-sweep")
    fields = ("eps", "n", "u_n_eps", "u_n_lim", "abs_err")
    a, b, c = params.as_tuple()
    rows = []
    for eps in eps_list:
        u, _ = limits.q_jacobi_recurrence(limits.QParams.from_family(params, eps), ns.n_max)
        for n in range(1, ns.n_max + 1):
            lim = float(bigm1.formula_u(a, b, c, n))
            rows.append({"eps": repr(eps), "n": n, "u_n_eps": repr(u[n]), "u_n_lim": repr(lim),
                         "abs_err": repr(abs(u[n] - lim))})
    return fields, rows


TABLES = {
    "coeffs": _table_coeffs,
    "polys": _table_polys,
    "weight-samples": _table_weight,
    "bi-coeffs": _table_bi,
    "q-sweep": _table_q,
}


def cmd_table(ns, out) -> int:
    if ns.kind not in TABLES:
        raise ParameterError(f"unknown table {ns.kind!r}; expected one of {', '.join(TABLE_KINDS)}")
    if ns.n_max < 0:
        raise ParameterError("--n-max must be >= 0")
    fields, rows = TABLES[ns.kind](_params(ns), ns)
    if ns.format == "csv":
        _write_csv(out, fields, rows)
    else:
        _write_json_lines(out, rows)
    return 0


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        ns = build_parser().parse_args(argv)
        if ns.command == "check":
            return cmd_check(ns, out)
        return cmd_table(ns, out)
    except (BigJacobiError, ValueError, ZeroDivisionError) as exc:
        out.write(json.dumps(_error_object(exc)) + "\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

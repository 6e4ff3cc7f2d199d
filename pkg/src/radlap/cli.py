"""Command-line surface: operator tables and verification reports.

Subcommands: eval-f21, fraclap, check-subharmonic, verify-hessian,
kernel-table.  Output is CSV or JSON, preceded by one metadata header
line carrying the package version and the invoking flags (never
timestamps), so identical invocations produce byte-identical files.
Files are written to a temporary name and atomically renamed; invalid
invocations leave no partial output.

Exit codes: 0 success / check holds, 1 a verification check fails,
2 invalid arguments or domain error, 3 quadrature non-convergence.

The environment variable RADLAP_THREADS caps the number of worker
threads used to fill table rows (default: CPU count).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import __version__
from .errors import NonConvergence, RadlapError
from .fraclap import (
    RadialProfile,
    fbeta_profile,
    fraclap_radial_report,
    power_profile,
)
from .hessianx import (
    check_fg_inequality,
    check_g_concavity,
    check_iterated_condition,
    check_log_convexity,
    make_case,
    tangent_report,
)
from .hypergeom import HyperParams, f21
from .kernel import FracParams, kernel_H, kernel_h_at_one, kernel_weight
from .quad import QuadSpec
from .subharm import (
    ConditionGrid,
    check_cond1,
    check_cond2,
    check_kconvex_radial,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID = 2
EXIT_NONCONVERGENCE = 3


def _fmt(x: float) -> str:
    return "%.17g" % x


def _rat(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _thread_count() -> int:
    cap = os.environ.get("RADLAP_THREADS")
    if cap is not None:
        try:
            value = int(cap)
        except ValueError:
            raise RadlapError(f"RADLAP_THREADS={cap!r} is not an integer")
        if value < 1:
            raise RadlapError("RADLAP_THREADS must be >= 1")
        return value
    return os.cpu_count() or 1


def _map_rows(fn, items):
    """Compute table rows, in input order, on a capped thread pool."""
    workers = min(_thread_count(), max(len(items), 1))
    if workers == 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _metadata_line(args: argparse.Namespace) -> str:
    flags = " ".join(args.raw_argv)
    return f"# radlap {__version__} {flags}"


def _emit(args: argparse.Namespace, header: list, rows: list,
          extra_json: dict | None = None) -> None:
    """Serialize a table as CSV or JSON and deliver it atomically."""
    lines = [_metadata_line(args)]
    if args.format == "csv":
        lines.append(",".join(header))
        for row in rows:
            lines.append(",".join(
                cell if isinstance(cell, str) else _fmt(cell) for cell in row))
    else:
        payload = {"columns": header, "rows": [list(row) for row in rows]}
        if extra_json:
            payload.update(extra_json)
        lines.append(json.dumps(payload, sort_keys=True))
    _write_text(args.out, "\n".join(lines) + "\n")


def _emit_object(args: argparse.Namespace, payload: dict) -> None:
    text = _metadata_line(args) + "\n" + json.dumps(payload, sort_keys=True) + "\n"
    _write_text(args.out, text)


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".radlap-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _grid(lo: float, hi: float, points: int, log: bool = False) -> list:
    if points < 1 or hi < lo:
        raise RadlapError("invalid range")
    if points == 1:
        return [lo]
    if log:
        ratio = (hi / lo) ** (1.0 / (points - 1))
        return [lo * ratio ** j for j in range(points)]
    step = (hi - lo) / (points - 1)
    return [lo + step * j for j in range(points)]


def _profile_from_flag(flag: str, p: FracParams) -> RadialProfile:
    if flag == "const":
        return RadialProfile(value=lambda r: 1.0, deriv1=lambda r: 0.0,
                             deriv2=lambda r: 0.0, deriv3=lambda r: 0.0,
                             name="const")
    if flag == "power":
        return power_profile(p.gamma)
    if flag.startswith("fbeta:"):
        return fbeta_profile(float(flag.split(":", 1)[1]))
    raise RadlapError(
        f"unknown profile {flag!r}: use fbeta:<beta>, power, or const")


def _report_dict(rep) -> dict:
    return {
        "holds": bool(rep.holds),
        "worst_margin": float(rep.worst_margin),
        "worst_location": ([float(x) for x in rep.worst_location]
                           if rep.worst_location else None),
        "samples_checked": int(rep.samples_checked),
    }


def cmd_eval_f21(args: argparse.Namespace) -> int:
    params = HyperParams(args.a, args.b, args.c)
    if args.x is not None:
        xs = [float(t) for t in args.x.split(",")]
    else:
        if args.x_min is None or args.x_max is None:
            raise RadlapError("provide --x or both --x-min and --x-max")
        xs = _grid(args.x_min, args.x_max, args.x_points)
    rows = _map_rows(lambda x: (x, f21(params, x)), xs)
    _emit(args, ["x", "F"], rows)
    return EXIT_OK


def cmd_fraclap(args: argparse.Namespace) -> int:
    p = FracParams(args.s, args.n)
    u = _profile_from_flag(args.profile, p)
    spec = QuadSpec(abs_tol=args.tol, rel_tol=args.tol)
    rs = _grid(args.r_min, args.r_max, args.r_points, log=True)

    def row(r: float):
        rep = fraclap_radial_report(u, p, r, args.normalization, spec)
        return (r, rep.value, rep.error_estimate, rep.converged)

    rows = _map_rows(row, rs)
    all_converged = all(row[3] for row in rows)
    if args.format == "json":
        _emit(args, ["r", "value", "error_estimate", "converged"], rows)
    else:
        _emit(args, ["r", "value", "error_estimate"],
              [row[:3] for row in rows])
    return EXIT_OK if all_converged else EXIT_NONCONVERGENCE


def cmd_check_subharmonic(args: argparse.Namespace) -> int:
    p = FracParams(args.s, args.n, operator_use=False)
    u = _profile_from_flag(args.profile, p)
    import numpy as np
    grid = ConditionGrid(
        tuple(np.logspace(math.log10(args.r_min), math.log10(args.r_max),
                          args.r_points)),
        tuple(np.exp(np.linspace(1e-4, args.log_tau_max, args.tau_points))))
    rep1 = check_cond1(u, p, grid, args.slack)
    payload = {"cond1": _report_dict(rep1)}
    if u.deriv1 is not None and u.deriv2 is not None:
        rep2 = check_cond2(u, p, grid.r_values, args.slack)
        payload["cond2"] = _report_dict(rep2)
        payload["equivalent"] = bool(rep1.holds) == bool(rep2.holds)
    payload["holds"] = bool(rep1.holds)
    _emit_object(args, payload)
    return EXIT_OK if rep1.holds else EXIT_CHECK_FAILED


def _verify_one_case(k: int, n: int, tol: float) -> dict:
    case = make_case(k, n)
    out = {
        "k": k,
        "n": n,
        "alpha": _rat(case.alpha),
        "beta": _rat(case.beta),
        "s": _rat(case.s),
        "a": _rat(case.a),
        "b": _rat(case.b),
        "c": _rat(case.c),
        "d1": _rat(case.d1),
        "d2": _rat(case.d2),
        "d3": _rat(case.d3),
        "degenerate": case.degenerate,
    }
    if k == 1:
        # the ratio route has f'(1) = +inf; certify the superposition
        # identity instead: the half-Laplacian iterate reduces to the
        # plain Laplacian of f_(n-2), i.e. radial 1-convexity
        rep = check_kconvex_radial(fbeta_profile(n - 2.0), 1, n)
        out["route"] = "superposition"
        out["laplacian_sign"] = _report_dict(rep)
        out["overall"] = bool(rep.holds)
        return out
    out["route"] = "tangent-comparison"
    tr = tangent_report(case)
    out["tangent"] = {
        "f_at_1": _rat(case.a / case.c),
        "g_at_1": _rat(case.a / case.c),
        "f_prime_1": _rat(case.a * (case.a - case.c)
                          / (case.c * (case.a - case.b - 1))),
        "g_prime_1": _rat(case.a * (case.c + 1) / (case.c * (2 * case.c - case.b))),
        "chain_ok": tr.chain_ok,
    }
    if case.degenerate:
        out["overall"] = True
        return out
    concave = check_g_concavity(case)
    fg = check_fg_inequality(case, slack=tol)
    logc = check_log_convexity(case, slack=tol)
    itc = check_iterated_condition(case, slack=tol)
    out["g_concavity"] = _report_dict(concave)
    out["fg_inequality"] = _report_dict(fg)
    out["log_convexity"] = _report_dict(logc)
    out["iterated"] = _report_dict(itc)
    out["overall"] = (tr.chain_ok and concave.holds and fg.holds
                      and logc.holds and itc.holds)
    return out


def cmd_verify_hessian(args: argparse.Namespace) -> int:
    k_max = args.k_max if args.k_max is not None else args.k
    n_max = args.n_max if args.n_max is not None else args.n
    cases = []
    for k in range(args.k, k_max + 1):
        for n in range(max(args.n, 2 * k), n_max + 1):
            cases.append(_verify_one_case(k, n, args.tol))
    if not cases:
        raise RadlapError("empty case range")
    overall = all(c["overall"] for c in cases)
    payload = cases[0] if len(cases) == 1 else {"cases": cases,
                                                "overall": overall}
    _emit_object(args, payload)
    return EXIT_OK if overall else EXIT_CHECK_FAILED


def cmd_kernel_table(args: argparse.Namespace) -> int:
    p = FracParams(args.s, args.n)
    taus = _grid(args.tau_min, args.tau_max, args.points)

    def row(tau: float):
        hq = kernel_H(p, tau)
        if tau > 1.0:
            w = kernel_weight(p, tau, route="hypergeometric")
            hh = w * ((tau - 1.0) * (tau + 1.0)) ** (1.0 + 2.0 * args.s) / tau
        else:
            hh = kernel_h_at_one(p)
        rel = abs(hq - hh) / max(abs(hh), 1e-300)
        return (tau, hq, hh, rel)

    rows = _map_rows(row, taus)
    _emit(args, ["tau", "H_quadrature", "H_hypergeometric", "rel_diff"], rows)
    worst = max(row[3] for row in rows)
    return EXIT_OK if worst <= args.tol else EXIT_CHECK_FAILED


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="radlap",
        description="Radial fractional Laplacian: evaluation and "
                    "inequality verification")
    sub = top.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", default=None, help="output path (default stdout)")

    sp = sub.add_parser("eval-f21", help="tabulate F(a,b,c,x)")
    sp.add_argument("--a", type=float, required=True)
    sp.add_argument("--b", type=float, required=True)
    sp.add_argument("--c", type=float, required=True)
    sp.add_argument("--x", default=None, help="comma-separated x values")
    sp.add_argument("--x-min", type=float, default=None)
    sp.add_argument("--x-max", type=float, default=None)
    sp.add_argument("--x-points", type=int, default=11)
    common(sp)
    sp.set_defaults(fn=cmd_eval_f21)

    sp = sub.add_parser("fraclap", help="tabulate (-Delta)^s of a profile")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--s", type=float, required=True)
    sp.add_argument("--profile", required=True,
                    help="fbeta:<beta> | power | const")
    sp.add_argument("--r-min", type=float, default=1e-2)
    sp.add_argument("--r-max", type=float, default=1e2)
    sp.add_argument("--r-points", type=int, default=16)
    sp.add_argument("--normalization", default="paper_unnormalized",
                    choices=("paper_unnormalized", "standard_constant"))
    sp.add_argument("--tol", type=float, default=1e-10)
    common(sp)
    sp.set_defaults(fn=cmd_fraclap)

    sp = sub.add_parser("check-subharmonic",
                        help="check the pointwise criteria on a grid")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--s", type=float, required=True)
    sp.add_argument("--profile", required=True)
    sp.add_argument("--r-min", type=float, default=1e-3)
    sp.add_argument("--r-max", type=float, default=1e3)
    sp.add_argument("--r-points", type=int, default=64)
    sp.add_argument("--tau-points", type=int, default=64)
    sp.add_argument("--log-tau-max", type=float, default=10.0)
    sp.add_argument("--slack", type=float, default=1e-12)
    common(sp)
    sp.set_defaults(fn=cmd_check_subharmonic)

    sp = sub.add_parser("verify-hessian",
                        help="run the inequality chain for (k, n)")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k-max", type=int, default=None)
    sp.add_argument("--n-max", type=int, default=None)
    sp.add_argument("--tol", type=float, default=1e-8)
    common(sp)
    sp.set_defaults(fn=cmd_verify_hessian)

    sp = sub.add_parser("kernel-table",
                        help="compare the H kernel routes on a tau grid")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--s", type=float, required=True)
    sp.add_argument("--tau-min", type=float, default=1.0)
    sp.add_argument("--tau-max", type=float, default=10.0)
    sp.add_argument("--points", type=int, default=10)
    sp.add_argument("--tol", type=float, default=1e-7)
    common(sp)
    sp.set_defaults(fn=cmd_kernel_table)
    return top


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code not in (0, None) else 0
    args.raw_argv = argv
    try:
        return args.fn(args)
    except NonConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except (RadlapError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

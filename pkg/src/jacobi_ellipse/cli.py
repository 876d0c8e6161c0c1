"""Command-line interface.

Exit codes: 0 success, 2 usage or domain error, 3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from .asymptotics import DEFAULT_CN, circle_max, estimate_error, lower_bound, reports_to_csv
from .ellipse import (
    BernsteinEllipse,
    CoefficientMethod,
    coeffs_explicit,
    coeffs_gegenbauer_closed,
    coeffs_recurrence,
    coeffs_transform_oracle,
    series_at_u,
)
from .errors import DomainError, InvariantError
from .extrema import (
    DEFAULT_GRID,
    estimate_critical_radius,
    lemma_rational_max,
    max_on_ellipse,
    min_cheb_T,
    min_cheb_U,
    min_gegenbauer,
    min_on_ellipse,
    sample_extremum,
)
from .figures import DEFAULT_FIGURES, FigureSpec, figure_csv, rho_star_csv
from .interp import interp_bound
from .orthopoly import GegenbauerParam, JacobiParams, jacobi_eval

COEFF_ROUTES = {
    CoefficientMethod.EXPLICIT_3F2.value: coeffs_explicit,
    CoefficientMethod.RECURRENCE.value: coeffs_recurrence,
    CoefficientMethod.TRANSFORM_ORACLE.value: coeffs_transform_oracle,
    CoefficientMethod.GEGENBAUER_CLOSED.value: coeffs_gegenbauer_closed,
}


def _write(args, text: str):
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt(args, default: str) -> str:
    return args.format or default


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([repr(x) if isinstance(x, float) else x for x in r])
    return buf.getvalue()


def _params(args) -> JacobiParams:
    return JacobiParams(args.alpha, args.beta)


# -- subcommands --------------------------------------------------------------

def cmd_coeffs(args):
    t = COEFF_ROUTES[args.method](_params(args), args.n)
    _write(args, t.to_json() if _fmt(args, "csv") == "json" else t.to_csv())


def cmd_eval(args):
    p = _params(args)
    e = BernsteinEllipse(args.rho)
    if args.theta:
        theta = np.array(args.theta, dtype=float)
    else:
        theta = np.arange(args.grid or 16) * (2 * math.pi / (args.grid or 16))
    t = coeffs_recurrence(p, args.n)
    series = np.atleast_1d(series_at_u(t, e.u(theta)))
    direct = np.atleast_1d(jacobi_eval(p, args.n, e.z(theta)))
    rows = [
        (float(th), float(s.real), float(s.imag), float(abs(s)), float(abs(s - d)))
        for th, s, d in zip(theta, series, direct)
    ]
    header = ["theta", "re", "im", "abs", "abs_diff_recurrence"]
    if _fmt(args, "csv") == "json":
        _write(args, json.dumps({"n": args.n, "alpha": p.alpha, "beta": p.beta, "rho": e.rho,
                                 "rows": [dict(zip(header, r)) for r in rows]}))
    else:
        _write(args, _csv(header, rows))


def cmd_extrema(args):
    e = BernsteinEllipse(args.rho)
    grid = args.grid or DEFAULT_GRID
    extra = {}
    if args.rational:
        s, t = args.rational
        rep = lemma_rational_max(s, t, e, cross_check=True, grid=grid)
    elif args.cheb:
        if args.kind == "max":
            a = -0.5 if args.cheb == "T" else 0.5
            rep = max_on_ellipse(JacobiParams(a, a), args.n, e, cross_check=True, grid=grid)
        elif args.cheb == "T":
            rep = min_cheb_T(args.n, e, cross_check=True, grid=grid)
        else:
            rep = min_cheb_U(args.n, e, cross_check=True, grid=grid)
    elif args.lam is not None:
        g = GegenbauerParam(args.lam)
        if args.kind == "max":
            rep = max_on_ellipse(g.jacobi, args.n, e, cross_check=True, grid=grid)
        else:
            rep = min_gegenbauer(g, args.n, e, cross_check=True, grid=grid)
            if args.critical_radius:
                extra["critical_radius_estimate"] = estimate_critical_radius(g, args.n).to_dict()
    else:
        p = _params(args)
        if args.kind == "max":
            rep = max_on_ellipse(p, args.n, e, cross_check=True, grid=grid)
        else:
            rep = min_on_ellipse(p, args.n, e, grid=grid)
    out = rep.to_dict()
    out.update(extra)
    if _fmt(args, "json") == "csv":
        rows = [(out["kind"], out["value"], t, out["rho"], out["method"], out["theorem_tag"], out["conditions_met"])
                for t in out["theta_locations"]]
        _write(args, _csv(["kind", "value", "theta", "rho", "method", "theorem_tag", "conditions_met"], rows))
    else:
        _write(args, json.dumps(out))


def cmd_rho_star(args):
    text = rho_star_csv(args.n_max)
    if _fmt(args, "csv") == "json":
        rows = list(csv.DictReader(io.StringIO(text)))
        text = json.dumps({"rho_star": [{"n": int(r["n"]), "rho_star": float(r["rho_star"])} for r in rows]})
    _write(args, text)


def cmd_asymptotic(args):
    p = _params(args)
    reports = [
        estimate_error(p, n, BernsteinEllipse(r), grid=args.grid or 4096, cn=args.cn)
        for r in args.rho
        for n in args.n
    ]
    if _fmt(args, "csv") == "json":
        _write(args, json.dumps({"reports": [r.to_dict() for r in reports]}))
    else:
        _write(args, reports_to_csv(reports))


def cmd_lower_bound(args):
    p = _params(args)
    e = BernsteinEllipse(args.rho)
    cm = circle_max(p, e)
    bound = lower_bound(p, args.n, e, cn=args.cn)
    out = {
        "n": args.n, "alpha": p.alpha, "beta": p.beta, "rho": e.rho, "cn": args.cn,
        "lower_bound": bound, "circle_max": cm.value, "circle_max_method": cm.method,
        "circle_max_sampled": cm.sampled_value, "circle_maximizers": list(cm.thetas),
    }
    if args.sample_min:
        s = sample_extremum(lambda z: jacobi_eval(p, args.n, z), e, "min", grid=args.grid or 2**14)
        out["min_abs_sampled"] = s.value
    if _fmt(args, "json") == "csv":
        _write(args, _csv(list(out), [[v if not isinstance(v, list) else " ".join(map(repr, v)) for v in out.values()]]))
    else:
        _write(args, json.dumps(out))


def cmd_figure(args):
    base = DEFAULT_FIGURES[args.id]
    if args.id == 4:
        spec = FigureSpec(4, n_list=tuple(range(2, args.n_max + 1, 2))) if args.n_max else base
    else:
        spec = FigureSpec(
            args.id,
            args.lam if args.lam is not None else base.lam,
            args.n if args.n is not None else base.n,
            tuple(args.rho) if args.rho else base.rhos,
            args.grid or base.theta_samples,
        )
    _write(args, figure_csv(spec))


def cmd_interp_bound(args):
    res = interp_bound(_params(args), args.n, args.rho, args.M, grid=args.grid or DEFAULT_GRID)
    for w in res.warnings:
        print(f"warning: {w}", file=sys.stderr)
    if _fmt(args, "json") == "csv":
        d = res.to_dict()
        d["warnings"] = "; ".join(d["warnings"])
        _write(args, _csv(list(d), [list(d.values())]))
    else:
        _write(args, res.to_json())


# -- parser -------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    c = argparse.ArgumentParser(add_help=False)
    c.add_argument("--format", choices=("csv", "json"), default=None, help="output format")
    c.add_argument("--out", default=None, metavar="PATH", help="write to PATH instead of stdout")
    c.add_argument("--grid", type=int, default=None, help="sampling grid size")
    c.add_argument("--seed", type=int, default=None, help="reserved; all outputs are deterministic")
    return c


def _jacobi_args(p, required=True):
    p.add_argument("--alpha", type=float, required=required)
    p.add_argument("--beta", type=float, required=required)
    p.add_argument("--n", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="jacobi-ellipse",
        description="Jacobi, Gegenbauer and Chebyshev polynomials on Bernstein ellipses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", parents=[common], help="Laurent coefficients d_{k,n}")
    _jacobi_args(p)
    p.add_argument("--method", choices=sorted(COEFF_ROUTES), default="recurrence")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("eval", parents=[common], help="evaluate P_n on an ellipse")
    _jacobi_args(p)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--theta", type=float, nargs="+", help="angles (default: a uniform grid of --grid points)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("extrema", parents=[common], help="max or min of |polynomial| on an ellipse")
    p.add_argument("kind", choices=("max", "min"))
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--cheb", choices=("T", "U"))
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--rational", type=float, nargs=2, metavar=("S", "T"),
                   help="maximum of |(z^2-s^2)/(z^2-t^2)| instead of a polynomial")
    p.add_argument("--n", type=int)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--critical-radius", action="store_true",
                   help="with --lambda and even n: add an exploratory, non-certified estimate of the "
                        "radius where the minimiser reaches the minor axis")
    p.set_defaults(func=cmd_extrema)

    p = sub.add_parser("rho-star", parents=[common], help="critical radii rho_n* for n = 2, 4, ..., n_max")
    p.add_argument("--n-max", type=int, default=100)
    p.set_defaults(func=cmd_rho_star)

    p = sub.add_parser("asymptotic", parents=[common], help="first-order asymptotic error sweep")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--n", type=int, nargs="+", required=True)
    p.add_argument("--rho", type=float, nargs="+", required=True)
    p.add_argument("--cn", type=float, default=DEFAULT_CN, help="constant in the lower bound")
    p.set_defaults(func=cmd_asymptotic)

    p = sub.add_parser("lower-bound", parents=[common], help="large-n lower bound for min |P_n|")
    _jacobi_args(p)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--cn", type=float, default=DEFAULT_CN)
    p.add_argument("--sample-min", action="store_true", help="also report the sampled minimum")
    p.set_defaults(func=cmd_lower_bound)

    p = sub.add_parser("figure", parents=[common], help="CSV data for figures 1-4")
    p.add_argument("--id", type=int, choices=(1, 2, 3, 4), required=True)
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--n", type=int)
    p.add_argument("--rho", type=float, nargs="+")
    p.add_argument("--n-max", type=int, help="figure 4 only")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("interp-bound", parents=[common], help="interpolation error bound")
    _jacobi_args(p)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--M", type=float, required=True, help="max |f| on the ellipse")
    p.set_defaults(func=cmd_interp_bound)
    return parser


def _validate(parser, args):
    if args.command == "extrema":
        if args.rational is None and args.n is None:
            parser.error("extrema: --n is required")
        chosen = sum(x is not None for x in (args.cheb, args.lam, args.rational)) + (args.alpha is not None)
        if chosen != 1:
            parser.error("extrema: give exactly one of --alpha/--beta, --cheb, --lambda or --rational")
        if args.alpha is not None and args.beta is None:
            parser.error("extrema: --beta is required with --alpha")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantError as exc:
        print(f"internal error: invariant violated: {exc}", file=sys.stderr)
        return 3
    except BrokenPipeError:
        # downstream closed early (e.g. piped into head); not an error for us
        sys.stderr.close()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

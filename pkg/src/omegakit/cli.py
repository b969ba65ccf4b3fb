"""Command-line front end; thin adapters over the library, JSON by default.

Exit codes: 0 success, 1 failed --assert (NonMember or violated bound),
2 usage errors.  The OMEGA_GRID environment variable overrides the default
boundary grid size for every subcommand.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import coeffbounds, disc, funcrep, omega, search
from .series import _parse_complex

PROP_ALIASES = {
    "starlike": "starlike",
    "convex": "convex",
    "ctc": "close_to_convex",
    "close_to_convex": "close_to_convex",
    "omega": "omega_bound",
    "omega_bound": "omega_bound",
    "u": "u_bound",
    "u_bound": "u_bound",
}

SLACK_TOL = 1e-9


class UsageError(Exception):
    pass


def _env_grid() -> int:
    raw = os.environ.get("OMEGA_GRID")
    if raw is None:
        return disc.DEFAULT_GRID
    try:
        g = int(raw)
    except ValueError:
        raise UsageError(f"OMEGA_GRID must be an integer, got {raw!r}") from None
    if g < disc.MIN_GRID:
        raise UsageError(f"OMEGA_GRID must be >= {disc.MIN_GRID}, got {g}")
    return g


def _fn(spec: str) -> funcrep.AnalyticFunction:
    try:
        return funcrep.parse_function(spec)
    except Exception as exc:
        raise UsageError(f"cannot parse function {spec!r}: {exc}") from exc


def _mu(text: str) -> complex:
    parts = [p for p in text.split(",") if p.strip()]
    try:
        if len(parts) == 1:
            return _parse_complex(parts[0])
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise UsageError(f"cannot parse mu {text!r}; use a literal like 0.5 or 1-0.5i")


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _verdict_payload(v: omega.Verdict, f: funcrep.AnalyticFunction,
                     extra: dict) -> dict:
    out = dict(extra)
    out["function"] = f.label
    out.update(v.to_json_dict())
    return out


def _reports_out(reports, fmt: str) -> None:
    if fmt == "csv":
        print(coeffbounds.BoundReport.csv_header())
        for r in reports:
            print(r.to_csv_row())
    else:
        _emit({"reports": [r.to_json_dict() for r in reports]})


def _assert_code(args, *, nonmember: bool = False, reports=()) -> int:
    if not getattr(args, "assert_", False):
        return 0
    if nonmember:
        return 1
    if any(r.slack < -SLACK_TOL for r in reports):
        return 1
    return 0


# -- subcommand handlers -------------------------------------------------------


def _cmd_member(args, grid: int) -> int:
    f = _fn(args.fn)
    check = omega.is_member_omega if args.cls == "omega" else omega.is_member_u
    v = check(f, tol=args.tol, grid=grid)
    _emit(_verdict_payload(v, f, {"class": args.cls}))
    return _assert_code(args, nonmember=(v.decision == omega.NONMEMBER))


def _cmd_suff(args, grid: int) -> int:
    f = _fn(args.fn)
    name = args.test
    if name == "fz":
        v = omega.sufficient_fz_derivative(f, grid=grid)
    elif name == "coeffsum":
        v = omega.sufficient_coeff_sum(f)
    elif name == "monomial":
        s = f.series(max(funcrep.DEFAULT_ORDER, 2))
        nz = [j for j in range(2, s.order + 1) if s.coeffs[j] != 0]
        if len(nz) != 1:
            raise UsageError(
                "monomial test needs f = z + a_n z^n with a single extra term"
            )
        v = omega.sufficient_monomial(nz[0], s.coeffs[nz[0]])
    elif name == "gammabeta":
        s = f.series(max(funcrep.DEFAULT_ORDER, 3))
        if any(c != 0 for c in s.coeffs[4:]):
            raise UsageError("gammabeta test needs f = z + g z^2 + b z^3")
        v = omega.sufficient_gamma_beta(s.coeffs[2], s.coeffs[3])
    else:  # op1 / op2
        pair = omega.obradovic_peng_tests(f, grid=grid)
        v = pair[0] if name == "op1" else pair[1]
    _emit(_verdict_payload(v, f, {"test": name}))
    return _assert_code(args, nonmember=(v.decision == omega.NONMEMBER))


def _cmd_radius(args, grid: int) -> int:
    f = _fn(args.fn)
    prop = PROP_ALIASES[args.property]
    res = disc.radius_of_property(f, prop, tol=args.tol, grid=min(grid, 2048))
    _emit({
        "function": f.label,
        "property": res.property,
        "radius": res.radius,
        "bracket": [res.bracket[0], res.bracket[1]],
        "evaluations": res.evaluations,
    })
    return 0


def _cmd_coeffs(args, grid: int) -> int:
    f = _fn(args.fn)
    reports = coeffbounds.coeff_bound_check(f, n_max=args.nmax)
    _reports_out(reports, args.format)
    return _assert_code(args, reports=reports)


def _cmd_fs(args, grid: int) -> int:
    f = _fn(args.fn)
    mu = _mu(args.mu)
    if args.k == 1:
        rep = coeffbounds.fekete_szego(f, mu)
    else:
        rep = coeffbounds.fs_kroot(f, args.k, mu)
    _reports_out([rep], args.format)
    return _assert_code(args, reports=[rep])


def _cmd_invert(args, grid: int) -> int:
    f = _fn(args.fn)
    reports = coeffbounds.inverse_coeff_check(f)
    _reports_out(reports, args.format)
    return _assert_code(args, reports=reports)


def _cmd_toeplitz(args, grid: int) -> int:
    f = _fn(args.fn)
    rep = coeffbounds.toeplitz_det(f, args.q, args.n)
    _reports_out([rep], args.format)
    return _assert_code(args, reports=[rep])


def _plot_points(f: funcrep.AnalyticFunction, r: float, n: int):
    theta = 2.0 * np.pi * np.arange(n) / n
    w = f.jet(r * np.exp(1j * theta)).f
    return theta, w


def _svg(xs: np.ndarray, ys: np.ndarray) -> str:
    ys = -ys  # keep mathematical orientation under svg's downward y
    x0, x1 = float(xs.min()), float(xs.max())
    y0, y1 = float(ys.min()), float(ys.max())
    side = max(x1 - x0, y1 - y0, 1e-9)
    pad = 0.05 * side
    vb = (f"{x0 - pad:.6g} {y0 - pad:.6g} "
          f"{x1 - x0 + 2 * pad:.6g} {y1 - y0 + 2 * pad:.6g}")
    pts = np.concatenate([np.stack([xs, ys], axis=1), [[xs[0], ys[0]]]])
    body = " ".join(f"{p[0]:.6g},{p[1]:.6g}" for p in pts)
    width = side / 400.0
    return (f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vb}">\n'
            f'  <polyline points="{body}" fill="none" stroke="black" '
            f'stroke-width="{width:.6g}"/>\n</svg>')


def _cmd_plot(args, grid: int) -> int:
    f = _fn(args.fn)
    n = max(args.points if args.points is not None else grid, disc.MIN_GRID)
    if not (0.0 < args.r <= 1.0):
        raise UsageError(f"plot radius must lie in (0, 1], got {args.r}")
    theta, w = _plot_points(f, args.r, n)
    if args.format == "csv":
        print("theta,re,im")
        for t, v in zip(theta, w):
            print(f"{t:.17g},{v.real:.17g},{v.imag:.17g}")
    elif args.format == "svg":
        print(_svg(w.real, w.imag))
    else:
        _emit({
            "source": f.label,
            "radius": args.r,
            "closed": True,
            "points": [[v.real, v.imag] for v in w],
        })
    return 0


def _cmd_search(args, grid: int) -> int:
    cfg = search.SearchConfig(
        target=args.target,
        seed=args.seed,
        restarts=args.restarts,
        steps_per_restart=args.steps,
        phi_degree=args.degree,
        step_scale=args.step_scale,
    )
    res = search.maximize_functional(cfg)
    if args.trace_csv:
        with open(args.trace_csv, "w", encoding="utf-8") as fh:
            fh.write("iteration,value\n")
            for it, val in res.trace:
                fh.write(f"{it},{val:.17g}\n")
    _emit({
        "target": res.target,
        "best_value": res.best_value,
        "paper_bound": res.paper_bound,
        "gap": res.gap(),
        "best_phi": [[c.real, c.imag] for c in res.best_phi.coeffs],
        "seed": args.seed,
        "restarts": args.restarts,
        "steps_per_restart": args.steps,
    })
    if getattr(args, "assert_", False) and res.best_value > res.paper_bound + SLACK_TOL:
        return 1
    return 0


def _cmd_catalog(args, grid: int) -> int:
    _emit({"catalog": funcrep.catalog_entries()})
    return 0


# -- parser ---------------------------------------------------------------------


def _add_fn(p: argparse.ArgumentParser) -> None:
    p.add_argument("--fn", required=True,
                   help="catalog id (koebe, ftilde:3, ell, phi1fun, f1, "
                        "fhat:0.4, fgb:0.2,0.1) or series literal '0, 1, 0.5'")


def _add_assert(p: argparse.ArgumentParser) -> None:
    p.add_argument("--assert", dest="assert_", action="store_true",
                   help="exit 1 on NonMember or a violated bound")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="omegakit",
        description="verify memberships, bounds, radii, and images for the "
                    "|zf'-f| < 1/2 class",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("member", help="class membership verdict")
    p.add_argument("--class", dest="cls", choices=("omega", "u"), default="omega")
    _add_fn(p)
    p.add_argument("--tol", type=float, default=omega.DEFAULT_TOL)
    p.add_argument("--grid", type=int, default=None)
    _add_assert(p)
    p.set_defaults(run=_cmd_member)

    p = sub.add_parser("suff", help="one-directional sufficient conditions")
    p.add_argument("--test", required=True,
                   choices=("fz", "coeffsum", "monomial", "gammabeta", "op1", "op2"))
    _add_fn(p)
    p.add_argument("--grid", type=int, default=None)
    _add_assert(p)
    p.set_defaults(run=_cmd_suff)

    p = sub.add_parser("radius", help="largest radius with a geometric property")
    p.add_argument("--property", required=True, choices=tuple(PROP_ALIASES))
    _add_fn(p)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--grid", type=int, default=None)
    p.set_defaults(run=_cmd_radius)

    p = sub.add_parser("coeffs", help="Taylor coefficient bounds")
    _add_fn(p)
    p.add_argument("--nmax", type=int, default=16)
    _add_format(p)
    _add_assert(p)
    p.set_defaults(run=_cmd_coeffs)

    p = sub.add_parser("fs", help="Fekete-Szego functional (k-th root via --k)")
    _add_fn(p)
    p.add_argument("--mu", required=True, help="complex literal or 're,im'")
    p.add_argument("--k", type=int, default=1)
    _add_format(p)
    _add_assert(p)
    p.set_defaults(run=_cmd_fs)

    p = sub.add_parser("invert", help="inverse-function coefficient bounds")
    _add_fn(p)
    _add_format(p)
    _add_assert(p)
    p.set_defaults(run=_cmd_invert)

    p = sub.add_parser("toeplitz", help="Toeplitz determinant bounds")
    _add_fn(p)
    p.add_argument("--q", type=int, required=True, choices=(2, 3))
    p.add_argument("--n", type=int, required=True)
    _add_format(p)
    _add_assert(p)
    p.set_defaults(run=_cmd_toeplitz)

    p = sub.add_parser("plot", help="image of a boundary circle")
    _add_fn(p)
    p.add_argument("--r", type=float, default=0.999)
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--format", choices=("json", "csv", "svg"), default="json")
    p.set_defaults(run=_cmd_plot)

    p = sub.add_parser("search", help="hill-climb a coefficient functional")
    p.add_argument("--target", required=True,
                   help="a2, an:5, fs:0.5, fsk:2,0.5, b2..b4, t2:2, t3:1, t3:2")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=32)
    p.add_argument("--steps", type=int, default=2000)
    p.add_argument("--degree", type=int, default=8)
    p.add_argument("--step-scale", type=float, default=0.15)
    p.add_argument("--trace-csv", default=None, help="write the improvement trace")
    _add_assert(p)
    p.set_defaults(run=_cmd_search)

    p = sub.add_parser("catalog", help="list the named functions")
    p.set_defaults(run=_cmd_catalog)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        grid = _env_grid()
        if getattr(args, "grid", None):
            if args.grid < disc.MIN_GRID:
                raise UsageError(f"--grid must be >= {disc.MIN_GRID}")
            grid = args.grid
        return args.run(args, grid)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (funcrep.UnknownId, funcrep.BadIndex, search.UnknownTarget,
            coeffbounds.UnsupportedShape, disc.DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (funcrep.PoleAtPoint, funcrep.ZeroOfF, disc.EvaluationFailure) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # the reader (head, less) went away mid-stream; exit quietly
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())

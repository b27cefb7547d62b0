"""Command-line surface of numaxis.

Scalar results are printed as one JSON object on stdout; curves and
trajectories go to CSV or SVG files. Errors are reported on stderr and
mapped to exit codes: 2 for bad arguments, 3 for domain errors (pole,
horizon, region, signature), 4 for output errors.

Examples:
    numaxis zeta --s -1
    numaxis sum --series naturals --method partial:4
    numaxis metric --xc 1 length --from 0 --to 3
    numaxis geodesic --x0 0 --ux0 0 --tau-max 3 --dtau 1e-4 --out traj.csv
    numaxis embed --region III --from -0.999 --to -0.001 --samples 200 --out iii.svg
    numaxis figure1 --xc 1 --out fig1.svg
"""

from __future__ import annotations

import argparse
import importlib
import logging
import sys
from collections.abc import Callable, Sequence
from typing import Any

from pydantic import ValidationError

from numaxis import embedding, geodesic, metric, series
from numaxis.emitters import emit_json, emit_svg, write_curves_csv, write_trajectory_csv
from numaxis.emitters.paths import validate_output_path
from numaxis.errors import ArgumentError, DomainError, OutputError

# numaxis re-exports the zeta() function under the same name as the submodule.
zeta = importlib.import_module("numaxis.zeta")

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ARGUMENT = 2
EXIT_DOMAIN = 3
EXIT_OUTPUT = 4

_BRANCHES = {"+": (1,), "-": (-1,), "both": (1, -1)}


def _zeta(args: argparse.Namespace) -> dict[str, Any]:
    method = zeta.ZetaMethod(args.method)
    options: dict[str, int] = {}
    if method is zeta.ZetaMethod.EULER_MACLAURIN:
        options = {"N": args.n or zeta.DEFAULT_EM_TERMS, "M": args.m}
    elif method is zeta.ZetaMethod.DIRECT_SUM:
        options = {"n_terms": args.n or zeta.DEFAULT_DIRECT_TERMS}
    result = zeta.zeta(complex(args.s, args.im), method, **options)
    payload: dict[str, Any] = {
        "value": result.value.real,
        "imag": result.value.imag,
        "method": result.method,
        "est_error": result.est_error,
        "s": [args.s, args.im],
    }
    if result.terms is not None:
        payload["n"] = result.terms
    if result.order is not None:
        payload["m"] = result.order
    return payload


def _sum(args: argparse.Namespace) -> dict[str, Any]:
    spec = series.SeriesSpec.parse(args.series)
    name, _, count = args.method.partition(":")
    if name == "partial" and count:
        try:
            n = int(count)
        except ValueError as exc:
            msg = f"partial:<n> needs an integer n, got {count!r}"
            raise ArgumentError(msg) from exc
        return {"series": spec.label, "method": "partial", "n": n, "value": series.partial_sum(spec, n), "assigned": True}

    try:
        method = series.SummationMethod(name)
    except ValueError as exc:
        msg = f"unknown summation method {args.method!r}; expected partial:<n>, partial, cesaro, abel or zeta-reg"
        raise ArgumentError(msg) from exc
    options: dict[str, Any] = {}
    if method in (series.SummationMethod.CESARO, series.SummationMethod.PARTIAL_SUM_LIMIT):
        options = {"n_max": args.n_max, "tol": args.tol}
    elif method is series.SummationMethod.ABEL:
        options = {"closed_form": not args.truncated, "tol": args.tol}
    result = series.assign(spec, method, **options)
    return {"series": spec.label, "method": result.method, "value": result.value, "assigned": result.assigned, "diagnostics": result.diagnostics}


def _metric_params(args: argparse.Namespace) -> metric.MetricParams:
    return metric.MetricParams(x_c=args.xc, c=args.c)


def _metric(args: argparse.Namespace) -> dict[str, Any]:
    p = _metric_params(args)
    if args.metric_command == "interval":
        interval = metric.interval_squared(args.dt, args.dx, args.x, p)
        return {"ds2": interval.ds2, "classification": interval.classification}
    if args.metric_command == "length":
        return {"length": metric.proper_length(args.x_from, args.x_to, p), "from": args.x_from, "to": args.x_to}
    horizon_class = metric.classify(args.x, p)
    return {"x": horizon_class.x, "f": horizon_class.f, "side": horizon_class.side, "horizon": p.horizon}


def _geodesic(args: argparse.Namespace) -> dict[str, Any]:
    p = _metric_params(args)
    target = validate_output_path(args.out, allowed_suffixes=[".csv", ".svg"]) if args.out else None
    s0 = geodesic.init_state(args.x0, args.ux0, p)
    trajectory = geodesic.integrate(s0, args.tau_max, args.dtau, p)
    if target is not None:
        if target.suffix.lower() == ".csv":
            write_trajectory_csv(trajectory, target)
        else:
            emit_svg([trajectory], target)
    final = trajectory.final
    return {
        "termination": trajectory.termination,
        "tau_end": final.tau,
        "t_end": final.t,
        "x_end": final.x,
        "eps": final.eps,
        "tau_horizon": geodesic.horizon_proper_time(s0, p),
        "samples": len(trajectory.samples),
        "out": str(target) if target else None,
    }


def _write_curves(curves: list[embedding.EmbeddingCurve], out: str) -> str:
    target = validate_output_path(out, allowed_suffixes=[".csv", ".svg"])
    if target.suffix.lower() == ".csv":
        write_curves_csv(curves, target)
    else:
        emit_svg(curves, target)
    return str(target)


def _embed(args: argparse.Namespace) -> dict[str, Any]:
    region = embedding.RegionId(args.region)
    validate_output_path(args.out, allowed_suffixes=[".csv", ".svg"])
    curves = [
        embedding.integrate_embedding(region, args.z_from, args.z_to, args.samples, args.xc, branch=branch) for branch in _BRANCHES[args.branch]
    ]
    out = _write_curves(curves, args.out)
    return {
        "region": region,
        "signature": region.info.signature,
        "branches": [c.branch for c in curves],
        "samples": args.samples,
        "y_max": max(float(abs(c.ys).max()) for c in curves),
        "out": out,
    }


def _figure1(args: argparse.Namespace) -> dict[str, Any]:
    validate_output_path(args.out, allowed_suffixes=[".csv", ".svg"])
    curves = embedding.figure1_curves(args.xc, args.margin, args.samples)
    out = _write_curves(curves, args.out)
    return {"curves": [f"{c.region.value}{'+' if c.branch > 0 else '-'}" for c in curves], "samples": args.samples, "xc": args.xc, "out": out}


def _add_metric_flags(parser: argparse.ArgumentParser, *, xc_required: bool = False) -> None:
    parser.add_argument("--xc", type=float, default=None if xc_required else 1.0, required=xc_required, help="characteristic length x_c (horizon at -x_c)")
    parser.add_argument("--c", type=float, default=1.0, help="speed constant c")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subcommand per module."""
    parser = argparse.ArgumentParser(prog="numaxis", description="Divergent sums, the numeric-axis metric and its plane embeddings.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug diagnostics to stderr")
    commands = parser.add_subparsers(dest="command", required=True, metavar="{zeta,sum,metric,geodesic,embed,figure1}")

    p_zeta = commands.add_parser("zeta", help="evaluate the Riemann zeta function")
    p_zeta.add_argument("--s", type=float, required=True, help="real part of s")
    p_zeta.add_argument("--im", type=float, default=0.0, help="imaginary part of s")
    p_zeta.add_argument("--n", type=int, default=None, help=f"directly summed terms (em: {zeta.DEFAULT_EM_TERMS}, direct: {zeta.DEFAULT_DIRECT_TERMS})")
    p_zeta.add_argument("--m", type=int, default=zeta.DEFAULT_EM_ORDER, help="Euler-Maclaurin correction order")
    p_zeta.add_argument("--method", choices=[m.value for m in zeta.ZetaMethod], default=zeta.ZetaMethod.EULER_MACLAURIN.value)
    p_zeta.set_defaults(handler=_zeta)

    p_sum = commands.add_parser("sum", help="assign a value to a series")
    p_sum.add_argument("--series", required=True, help="ones | naturals | grandi | geometric:<r> | power:<k>")
    p_sum.add_argument("--method", required=True, help="partial:<n> | partial | cesaro | abel | zeta-reg")
    p_sum.add_argument("--n-max", type=int, default=series.DEFAULT_N_MAX, help="terms used by cesaro and partial")
    p_sum.add_argument("--tol", type=float, default=series.DEFAULT_TOL, help="stabilisation tolerance for cesaro, abel and partial")
    p_sum.add_argument("--truncated", action="store_true", help="abel: sum the power series term by term")
    p_sum.set_defaults(handler=_sum)

    p_metric = commands.add_parser("metric", help="line element, proper length and horizon side")
    _add_metric_flags(p_metric, xc_required=True)
    metric_commands = p_metric.add_subparsers(dest="metric_command", required=True)
    p_interval = metric_commands.add_parser("interval", help="squared interval for (dt, dx) at x")
    p_interval.add_argument("--dt", type=float, required=True)
    p_interval.add_argument("--dx", type=float, required=True)
    p_interval.add_argument("--x", type=float, required=True)
    p_length = metric_commands.add_parser("length", help="proper length between two exterior points")
    p_length.add_argument("--from", dest="x_from", type=float, required=True)
    p_length.add_argument("--to", dest="x_to", type=float, required=True)
    p_classify = metric_commands.add_parser("classify", help="which side of the horizon x lies on")
    p_classify.add_argument("--x", type=float, required=True)
    p_metric.set_defaults(handler=_metric)

    p_geo = commands.add_parser("geodesic", help="integrate a timelike radial geodesic")
    p_geo.add_argument("--x0", type=float, required=True)
    p_geo.add_argument("--ux0", type=float, required=True)
    p_geo.add_argument("--tau-max", type=float, required=True)
    p_geo.add_argument("--dtau", type=float, required=True)
    _add_metric_flags(p_geo)
    p_geo.add_argument("--out", default=None, help="trajectory file (.csv or .svg)")
    p_geo.set_defaults(handler=_geodesic)

    p_embed = commands.add_parser("embed", help="integrate the plane embedding of one region")
    p_embed.add_argument("--region", choices=[r.value for r in embedding.RegionId], default=embedding.RegionId.II.value)
    p_embed.add_argument("--from", dest="z_from", type=float, required=True, help="first z = x/x_c")
    p_embed.add_argument("--to", dest="z_to", type=float, required=True, help="last z = x/x_c")
    p_embed.add_argument("--samples", type=int, default=embedding.DEFAULT_FIGURE1_SAMPLES)
    p_embed.add_argument("--xc", type=float, default=1.0)
    p_embed.add_argument("--branch", choices=list(_BRANCHES), default="both")
    p_embed.add_argument("--out", required=True, help="curve file (.csv or .svg)")
    p_embed.set_defaults(handler=_embed)

    p_fig = commands.add_parser("figure1", help="all six embedding branches")
    p_fig.add_argument("--xc", type=float, default=1.0)
    p_fig.add_argument("--margin", type=float, default=embedding.DEFAULT_FIGURE1_MARGIN)
    p_fig.add_argument("--samples", type=int, default=embedding.DEFAULT_FIGURE1_SAMPLES)
    p_fig.add_argument("--out", required=True, help="figure file (.svg or .csv)")
    p_fig.set_defaults(handler=_figure1)

    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def run(argv: Sequence[str] | None = None) -> int:
    """Parse `argv`, run one subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ARGUMENT

    _configure_logging(args.verbose)
    handler: Callable[[argparse.Namespace], dict[str, Any]] = args.handler
    try:
        emit_json(handler(args))
    except (ArgumentError, ValidationError) as exc:
        print(f"numaxis {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ARGUMENT
    except DomainError as exc:
        print(f"numaxis {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OutputError as exc:
        print(f"numaxis {args.command}: output error: {exc}", file=sys.stderr)
        return EXIT_OUTPUT
    return EXIT_OK


def main() -> None:
    sys.exit(run())

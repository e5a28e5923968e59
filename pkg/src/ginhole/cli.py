"""Command-line front end for the hole-rate toolkit.

Subcommands
-----------
``table``
    Dump the closed-form catalog as CSV (symbolic and numeric columns).
``ru``
    Hole rate constant R_U for a region file: closed form when the
    region is in the catalog, balayage solver otherwise.
``balayage``
    Solve the boundary-density problem and write the solution JSON
    (coefficients, residuals, r_u).
``fekete``
    Optimize a weighted point configuration.  ``--n`` takes one order
    (points CSV plus report JSON) or three and more increasing orders
    (per-order optimization plus extrapolated limit).
``holeprob``
    Finite-n hole probability for a scaled region, exact determinant
    route; ``--n auto`` picks the stabilized order.
``holeprob-limit``
    Normalized log-probabilities (1/n^2) log P over increasing orders
    with the extrapolated limit, the finite-n route to 3/4 - R_U.
``kostlan``
    Radial slope study for the annulus family with inner fraction c;
    fits (log P)/r^4 against the closed-form slope.
``crosscheck``
    Run every applicable route on one region and compare; ``--out``
    appends one JSON line per run to a report file.

Exit status is 0 on success, 1 on invalid input, and 2 on numerical
non-convergence; errors print one JSON diagnostic object to stderr.
A crosscheck whose routes disagree still exits 0: the verdict is data,
carried by the report's ``passed`` field.  JSON artifacts are written
with sorted keys and CSV floats with 17 significant digits, so equal
configs and seeds produce byte-identical outputs.  ``--threads`` (or
the GINHOLE_THREADS environment variable) caps inner parallelism.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from ginhole import crosscheck, determinant, fekete, kostlan
from ginhole.balayage import solve_balayage
from ginhole.catalog import catalog_entries, hole_rate, in_catalog
from ginhole.geometry import ConvergenceError, Region, region_from_json

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NO_CONVERGENCE = 2
THREADS_ENV_VAR = "GINHOLE_THREADS"


@dataclass(frozen=True)
class RunConfig:
    """Validated parameters for one CLI invocation.

    ``n`` and ``r`` stay as raw strings ("auto", "200", "40,80,160");
    each subcommand parses the form it accepts and rejects the rest.
    """

    subcommand: str
    region: str | None = None
    n: str | None = None
    r: str | None = None
    c: float | None = None
    modes: int = 16
    moments: int = 48
    restarts: int = 8
    seed: int = 0
    max_iters: int = 2000
    tolerance: float = 1e-12
    out: str | None = None
    plot: str | None = None
    threads: int = 1


def _fmt(x) -> str:
    return "%.17g" % float(x)


def _clean(obj):
    """Make a payload JSON-safe: numpy scalars to Python, non-finite
    floats to their repr strings, complex to [re, im]."""
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return x if math.isfinite(x) else repr(x)
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    return obj


def write_json(payload: dict, path: str | None) -> None:
    """Write a deterministic JSON artifact (sorted keys), or print it."""
    text = json.dumps(_clean(payload), sort_keys=True, indent=2,
                      allow_nan=False)
    if path is None:
        print(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def emit_plot_data(series: dict, path: str) -> None:
    """Write named equal-length sequences as a CSV with a header row."""
    if not series:
        raise ValueError("plot data needs at least one series")
    cols = [list(v) for v in series.values()]
    if any(len(c) == 0 for c in cols):
        raise ValueError("plot series must be non-empty")
    if len({len(c) for c in cols}) != 1:
        raise ValueError("plot series must share one length")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(list(series))
        for row in zip(*cols):
            writer.writerow([_fmt(v) for v in row])


def _fail(kind: str, detail: str) -> None:
    print(json.dumps({"status": "error", "kind": kind, "detail": detail},
                     sort_keys=True), file=sys.stderr)


def _load_region(config: RunConfig) -> Region:
    if config.region is None:
        raise ValueError("this subcommand requires --region")
    with open(config.region, encoding="utf-8") as fh:
        spec = json.load(fh)
    return region_from_json(spec)


def _int_list(text: str, what: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"{what} must be an integer or comma list, "
                         f"got {text!r}") from None
    if not values:
        raise ValueError(f"{what} must not be empty")
    return values


def _float_list(text: str, what: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"{what} must be a number or comma list, "
                         f"got {text!r}") from None
    if not values:
        raise ValueError(f"{what} must not be empty")
    return values


def _cmd_table(config: RunConfig) -> int:
    header = ["name", "region", "rate_excess_formula", "rate_excess",
              "rate", "density_formula"]
    rows = []
    for entry in catalog_entries():
        shape = json.dumps(entry.region.to_json(), sort_keys=True,
                           separators=(",", ":"))
        rows.append([entry.name, shape, entry.rate_excess_formula,
                     _fmt(entry.r_prime_closed),
                     _fmt(0.75 + entry.r_prime_closed),
                     entry.density_formula])
    if config.out is None:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    else:
        with open(config.out, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
    return EXIT_OK


def _cmd_ru(config: RunConfig) -> int:
    region = _load_region(config)
    if in_catalog(region):
        value, method = hole_rate(region), "closed_form"
    else:
        value, method = solve_balayage(region).r_u, "balayage"
    print(_fmt(value))
    if config.out is not None:
        write_json({"r_u": value, "method": method,
                    "region": region.to_json()}, config.out)
    return EXIT_OK


def _cmd_balayage(config: RunConfig) -> int:
    region = _load_region(config)
    sol = solve_balayage(region, modes=config.modes, moments=config.moments)
    coeffs = [[list(map(float, piece)) for piece in comp]
              for comp in sol.measure.coefficients]
    payload = {"r_u": sol.r_u, "coefficients": coeffs,
               "moment_residual": sol.moment_residual,
               "collocation_residual": sol.collocation_residual,
               "condition": sol.condition, "rank": sol.rank,
               "converged": sol.converged, "modes": config.modes,
               "moments": config.moments, "region": region.to_json()}
    write_json(payload, config.out)
    if config.out is not None:
        print(f"r_u={_fmt(sol.r_u)} converged={sol.converged}")
    if not sol.converged:
        _fail("non_convergence", "balayage solver did not converge; "
              "see the solution JSON for residuals")
        return EXIT_NO_CONVERGENCE
    return EXIT_OK


def _write_points_csv(points, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["re", "im"])
        for z in points:
            writer.writerow([_fmt(z.real), _fmt(z.imag)])


def _cmd_fekete(config: RunConfig) -> int:
    region = _load_region(config)
    orders = _int_list(config.n or "200", "--n")
    if len(orders) == 2:
        raise ValueError("--n takes one order, or at least three for "
                         "extrapolation")
    if any(b <= a for a, b in zip(orders, orders[1:])):
        raise ValueError("--n orders must be increasing")
    reports = []
    for nn in orders:
        reports.append(fekete.optimize(region, nn, seed=config.seed,
                                       restarts=config.restarts,
                                       max_iters=config.max_iters,
                                       threads=config.threads))
    best = reports[-1]
    payload = {
        "orders": [{"n": nn, "r_estimate": rep.r_estimate,
                    "value": rep.configuration.value,
                    "delta_n": rep.delta_n,
                    "min_separation": rep.min_separation,
                    "feasible": rep.configuration.feasible,
                    "iterations": rep.iterations,
                    "restart_values": list(rep.restart_values)}
                   for nn, rep in zip(orders, reports)],
        "seed": config.seed, "restarts": config.restarts,
        "region": region.to_json(),
    }
    if len(orders) >= 3:
        ns = np.asarray(orders, dtype=float)
        design = np.stack([np.ones_like(ns), np.log(ns) / ns, 1.0 / ns],
                          axis=1)
        ests = np.asarray([rep.r_estimate for rep in reports])
        coef, *_ = np.linalg.lstsq(design, ests, rcond=None)
        payload["limit"] = float(coef[0])
        print(f"limit={_fmt(coef[0])}")
    else:
        print(f"r_estimate={_fmt(best.r_estimate)} "
              f"min_separation={_fmt(best.min_separation)}")
    if config.out is not None:
        report_path = os.path.splitext(config.out)[0] + ".json"
        if report_path == config.out:
            raise ValueError("--out must be a CSV path (the report JSON "
                             "takes the same name with a .json suffix)")
        _write_points_csv(best.configuration.points, config.out)
        write_json(payload, report_path)
    if config.plot is not None:
        emit_plot_data({"n": orders,
                        "r_estimate": [rep.r_estimate for rep in reports]},
                       config.plot)
    return EXIT_OK


def _cmd_holeprob(config: RunConfig) -> int:
    region = _load_region(config)
    if config.r is None:
        raise ValueError("holeprob requires --r (the dilation scale)")
    scale = float(config.r)
    text = config.n or "auto"
    if text == "auto":
        res = determinant.log_hole_probability(region, scale)
    else:
        orders = _int_list(text, "--n")
        if len(orders) == 1:
            res = determinant.log_hole_probability(region, scale, orders[0])
        else:
            res = determinant.log_hole_probability(region, scale,
                                                   n_sweep=orders)
    payload = {"log_probability": res.log_probability, "order": res.order,
               "scale": res.scale,
               "quadrature_error_bound": res.quadrature_error_bound,
               "region": region.to_json()}
    if res.sequence is not None:
        payload["sequence"] = [[nn, lp] for nn, lp in res.sequence]
    print(f"log_probability={_fmt(res.log_probability)} order={res.order}")
    if config.out is not None:
        write_json(payload, config.out)
    if config.plot is not None:
        seq = res.sequence or ((res.order, res.log_probability),)
        emit_plot_data({"n": [nn for nn, _ in seq],
                        "log_probability": [lp for _, lp in seq]},
                       config.plot)
    return EXIT_OK


def _cmd_holeprob_limit(config: RunConfig) -> int:
    region = _load_region(config)
    if config.n is None:
        radial = region.radial_bands() is not None
        orders = [40, 80, 160] if radial else [30, 60, 120]
    else:
        orders = _int_list(config.n, "--n")
    seq, c0 = determinant.limit_estimate(region, orders)
    payload = {"sequence": [[nn, vn] for nn, vn in seq], "limit": c0,
               "rate_estimate": 0.75 - c0, "region": region.to_json()}
    print(f"limit={_fmt(c0)} rate_estimate={_fmt(0.75 - c0)}")
    if config.out is not None:
        write_json(payload, config.out)
    if config.plot is not None:
        emit_plot_data({"n": [nn for nn, _ in seq],
                        "inv_n2_logP": [vn for _, vn in seq]}, config.plot)
    return EXIT_OK


def _cmd_kostlan(config: RunConfig) -> int:
    if config.c is None:
        raise ValueError("kostlan requires --c (inner radius fraction)")
    radii = _float_list(config.r or "8,12,16,20", "--r")
    rep = kostlan.slope_study(config.c, radii,
                              truncation_tolerance=config.tolerance)
    payload = {"c": config.c, "values": [[r, v] for r, v in rep.values],
               "extrapolated_slope": rep.extrapolated_slope,
               "closed_slope": rep.closed_slope,
               "relative_gap": rep.relative_gap}
    print(f"slope={_fmt(rep.extrapolated_slope)} "
          f"closed={_fmt(rep.closed_slope)} "
          f"relative_gap={_fmt(rep.relative_gap)}")
    if config.out is not None:
        write_json(payload, config.out)
    if config.plot is not None:
        emit_plot_data({"r": [r for r, _ in rep.values],
                        "inv_r4_logP": [v for _, v in rep.values]},
                       config.plot)
    return EXIT_OK


def _cmd_crosscheck(config: RunConfig) -> int:
    region = _load_region(config)
    report = crosscheck.cross_validate(region, seed=config.seed,
                                       restarts=config.restarts,
                                       threads=config.threads)
    for name in sorted(report.routes):
        verdict = "ok" if report.passes[name] else "FAIL"
        ref = " (reference)" if name == report.reference_route else ""
        print(f"{name:18s} {_fmt(report.routes[name])} {verdict}{ref}")
    if report.floor_violations:
        print(f"floor violations: {', '.join(report.floor_violations)}")
    print(f"passed={report.passed}")
    if config.out is not None:
        crosscheck.append_report(report, config.out)
    return EXIT_OK


_HANDLERS = {
    "table": _cmd_table,
    "ru": _cmd_ru,
    "balayage": _cmd_balayage,
    "fekete": _cmd_fekete,
    "holeprob": _cmd_holeprob,
    "holeprob-limit": _cmd_holeprob_limit,
    "kostlan": _cmd_kostlan,
    "crosscheck": _cmd_crosscheck,
}


def run(config: RunConfig) -> int:
    """Dispatch one validated config; returns the process exit status."""
    handler = _HANDLERS.get(config.subcommand)
    if handler is None:
        _fail("validation", f"unknown subcommand {config.subcommand!r}")
        return EXIT_INVALID
    try:
        return handler(config)
    except ConvergenceError as exc:
        _fail("non_convergence", str(exc))
        return EXIT_NO_CONVERGENCE
    except (ValueError, KeyError, TypeError, OSError) as exc:
        _fail("validation", str(exc))
        return EXIT_INVALID


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV_VAR, "1")
    try:
        n = int(raw)
    except ValueError:
        return -1  # rejected later with a clear message
    return n


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ginhole",
        description="Hole probabilities and hole-rate constants for the "
                    "Ginibre ensemble")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, help_text, *, region=False):
        p = sub.add_parser(name, help=help_text)
        if region:
            p.add_argument("--region", required=True,
                           help="path to a region JSON file")
        p.add_argument("--out", help="output artifact path")
        p.add_argument("--threads", type=int, default=_default_threads(),
                       help=f"parallelism cap (default from "
                            f"{THREADS_ENV_VAR} or 1)")
        return p

    add("table", "dump the closed-form catalog as CSV")
    add("ru", "hole rate constant for a region", region=True)

    p = add("balayage", "solve the boundary density problem", region=True)
    p.add_argument("--modes", type=int, default=16,
                   help="Fourier modes per boundary piece")
    p.add_argument("--moments", type=int, default=48,
                   help="area moment constraints")

    p = add("fekete", "optimize a weighted point configuration", region=True)
    p.add_argument("--n", default="200",
                   help="order, or comma list of at least three orders")
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iters", type=int, default=2000)
    p.add_argument("--plot", help="write n,r_estimate CSV here")

    p = add("holeprob", "finite-n hole probability at one scale", region=True)
    p.add_argument("--r", required=True, help="dilation scale")
    p.add_argument("--n", default="auto",
                   help="matrix order: auto, an integer, or a comma list")
    p.add_argument("--plot", help="write n,log_probability CSV here")

    p = add("holeprob-limit", "extrapolate (1/n^2) log P to the limit",
            region=True)
    p.add_argument("--n", help="comma list of at least three orders")
    p.add_argument("--plot", help="write n,inv_n2_logP CSV here")

    p = add("kostlan", "radial slope study for the annulus family")
    p.add_argument("--c", type=float, required=True,
                   help="inner radius fraction, 0 <= c < 1")
    p.add_argument("--r", default="8,12,16,20",
                   help="comma list of at least three radii")
    p.add_argument("--tolerance", type=float, default=1e-12,
                   help="tail truncation tolerance")
    p.add_argument("--plot", help="write r,inv_r4_logP CSV here")

    p = add("crosscheck", "compare every applicable route", region=True)
    p.add_argument("--restarts", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    fields = {f: getattr(args, f) for f in RunConfig.__dataclass_fields__
              if hasattr(args, f)}
    config = RunConfig(**fields)
    if config.threads < 1:
        _fail("validation",
              f"--threads (or {THREADS_ENV_VAR}) must be a positive integer")
        return EXIT_INVALID
    return run(config)


if __name__ == "__main__":
    sys.exit(main())

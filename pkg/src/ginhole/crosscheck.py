"""Cross-validation of the independent hole-rate routes.

Each route estimates the same number, the hole rate constant R_U for a
hole U inside the unit disk: the closed-form catalog, the balayage
energy solver, weighted Fekete extrapolation, finite-n determinant
extrapolation, and (for radially symmetric holes) the gamma-product
slope.  The report records every populated route, the pairwise gaps,
and a pass/fail verdict per route against its declared accuracy.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from ginhole import determinant, fekete, kostlan
from ginhole.balayage import solve_balayage
from ginhole.catalog import EMPTY_SET_RATE, hole_rate, in_catalog
from ginhole.geometry import EmptyRegion, Region

# accuracy each route is held to, against the reference route
SMOOTH_BALAYAGE_TOL = 1e-6      # absolute, closed form vs solver
CORNER_BALAYAGE_TOL = 1e-4      # absolute, shapes with boundary corners
FEKETE_REL_TOL = 0.02           # relative on R_U
DET_REL_TOL = 0.10              # relative on the excess R_U - 3/4
KOSTLAN_REL_TOL = 0.03          # relative on the excess R_U - 3/4

_RATE_FLOOR = 0.75 - 1e-9


@dataclass(frozen=True)
class CrossValidationReport:
    """All route values for one region, with pairwise gaps and verdicts.

    ``routes`` maps route name to its R_U estimate; ``gaps`` holds
    |difference| per unordered pair "a|b"; ``passes`` holds the
    per-route verdict against the reference route (closed_form when the
    region is in the catalog, else balayage); ``floor_violations``
    lists routes whose value fell below 3/4 - 1e-9, which no correct
    route can do.
    """

    region: Region
    routes: dict
    gaps: dict
    passes: dict
    reference_route: str
    floor_violations: tuple
    passed: bool

    def as_dict(self) -> dict:
        return {
            "region": self.region.to_json(),
            "routes": dict(self.routes),
            "gaps": dict(self.gaps),
            "passes": dict(self.passes),
            "reference_route": self.reference_route,
            "floor_violations": list(self.floor_violations),
            "passed": self.passed,
        }


def _has_corners(region: Region) -> bool:
    return any(len(comp.pieces) > 1 for comp in region.boundary())


def _route_values(region: Region, seed: int, restarts: int, threads: int,
                  fekete_orders, det_orders, kostlan_radii) -> dict:
    routes = {}
    if isinstance(region, EmptyRegion):
        routes["closed_form"] = EMPTY_SET_RATE
        routes["balayage"] = EMPTY_SET_RATE
    else:
        if in_catalog(region):
            routes["closed_form"] = hole_rate(region)
        sol = solve_balayage(region)
        routes["balayage"] = sol.r_u
    _, lim = fekete.rate_study(region, fekete_orders, seed=seed,
                               restarts=restarts, threads=threads)
    routes["fekete"] = lim
    if det_orders is None:
        radial = region.radial_bands() is not None
        det_orders = (40, 80, 160) if radial else (30, 60, 120)
    _, c0 = determinant.limit_estimate(region, det_orders)
    routes["det_extrapolation"] = 0.75 - c0
    bands = region.radial_bands()
    if bands is not None:
        if bands:
            _, slope = kostlan.band_slope_study(bands, kostlan_radii)
        else:
            slope = 0.0
        routes["kostlan"] = 0.75 - slope
    return routes


def cross_validate(region: Region, seed: int = 0, restarts: int = 8,
                   threads: int = 1, fekete_orders=(50, 100, 200),
                   det_orders=None,
                   kostlan_radii=(12, 16, 20, 24)) -> CrossValidationReport:
    """Run every applicable route on one region and compare them.

    The reference is the closed form when the region is in the catalog,
    the balayage solver otherwise.  ``det_orders`` defaults to
    (40, 80, 160) for radially symmetric holes and (30, 60, 120)
    otherwise (the 2D assembly is the slow path).
    """
    routes = _route_values(region, seed, restarts, threads,
                           fekete_orders, det_orders, kostlan_radii)
    reference = "closed_form" if "closed_form" in routes else "balayage"
    ref = routes[reference]
    ref_excess = ref - 0.75

    names = sorted(routes)
    gaps = {f"{a}|{b}": abs(routes[a] - routes[b])
            for i, a in enumerate(names) for b in names[i + 1:]}

    def excess_ok(value: float, rel: float) -> bool:
        if abs(ref_excess) < 1e-12:
            return abs(value - ref) <= 1e-9
        return abs((value - ref) / ref_excess) <= rel

    passes = {}
    for name, value in routes.items():
        if name == reference:
            passes[name] = True
        elif name == "balayage":
            tol = (CORNER_BALAYAGE_TOL if _has_corners(region)
                   else SMOOTH_BALAYAGE_TOL)
            passes[name] = abs(value - ref) <= tol
        elif name == "fekete":
            passes[name] = abs(value - ref) / abs(ref) <= FEKETE_REL_TOL
        elif name == "det_extrapolation":
            passes[name] = excess_ok(value, DET_REL_TOL)
        elif name == "kostlan":
            passes[name] = excess_ok(value, KOSTLAN_REL_TOL)
    violations = tuple(n for n, v in routes.items() if v < _RATE_FLOOR)
    return CrossValidationReport(
        region=region, routes=routes, gaps=gaps, passes=passes,
        reference_route=reference, floor_violations=violations,
        passed=all(passes.values()) and not violations)


def append_report(report: CrossValidationReport, path: str) -> None:
    """Append one report as a JSON line; existing lines are never touched."""
    line = json.dumps(report.as_dict(), sort_keys=True)
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(line + "\n")


def read_reports(path: str) -> list:
    """Parse every JSON line previously appended to a report file."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(json.loads(line))
    return out

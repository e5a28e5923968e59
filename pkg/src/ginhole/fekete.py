"""Weighted Fekete point optimization on the unit disk with a hole.

The n-point weighted Fekete configuration maximizes

    F(z_1..z_n) = sum_{i<j} log|z_i - z_j| - ((n-1)/2) sum_i |z_i|^2

over the feasible set K = (closed unit disk) minus the open hole U.
The normalized estimate r_estimate = -(2/(n(n-1))) F increases with n
toward the hole rate constant R_U, giving an optimization route to the
same number the balayage energy and determinant routes compute.

The optimizer is projected gradient ascent with backtracking, steps
capped at half the current minimum separation, stratified equilibrium
initialization, a single-point exchange polish, and seeded best-of-k
restarts.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ginhole.catalog import balayage_closed, has_density
from ginhole.densities import BoundaryMeasure
from ginhole.geometry import (EmptyRegion, Region, boundary_point,
                              fits_in_unit_disk)

_DISK_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class PointConfiguration:
    """n points in the closed unit disk minus the hole.

    ``feasible`` confirms every point lies in the feasible set (within
    1e-12 of the disk) and the points are pairwise distinct; ``value``
    is the weighted log-product (-inf when points coincide).
    """

    points: np.ndarray
    feasible: bool
    value: float

    @property
    def n(self) -> int:
        return len(self.points)


def weighted_log_product(config) -> float:
    """sum_{i<j} log|z_i - z_j| - ((n-1)/2) sum |z_i|^2.

    Accepts a PointConfiguration or a plain array of points; coincident
    points give the -inf sentinel.
    """
    z = np.asarray(getattr(config, "points", config), dtype=complex)
    n = len(z)
    d = np.abs(z[:, None] - z[None, :])
    iu = np.triu_indices(n, 1)
    gaps = d[iu]
    if np.any(gaps == 0.0):
        return -math.inf
    return float(np.sum(np.log(gaps)) - 0.5 * (n - 1) * np.sum(np.abs(z) ** 2))


def min_separation(config) -> float:
    """Minimum pairwise distance of the configuration."""
    z = np.asarray(getattr(config, "points", config), dtype=complex)
    if len(z) < 2:
        raise ValueError("need at least two points")
    d = np.abs(z[:, None] - z[None, :])
    return float(np.min(d[np.triu_indices(len(z), 1)]))


def configuration(points, region: Region) -> PointConfiguration:
    """Bundle points with their feasibility flag and objective value."""
    z = np.asarray(points, dtype=complex)
    value = weighted_log_product(z)
    inside = np.asarray(region.contains(z), dtype=bool)
    ok = (np.all(np.abs(z) <= 1.0 + _DISK_TOL) and not np.any(inside)
          and math.isfinite(value))
    return PointConfiguration(points=z, feasible=bool(ok), value=value)


def ascent_direction(points) -> np.ndarray:
    """Euclidean gradient of the objective, as one complex number per point.

    Component i is sum_{j != i} (z_i - z_j)/|z_i - z_j|^2 - (n-1) z_i;
    its real and imaginary parts are dF/dx_i and dF/dy_i.
    """
    z = np.asarray(points, dtype=complex)
    n = len(z)
    diff = z[:, None] - z[None, :]
    d2 = np.abs(diff) ** 2
    np.fill_diagonal(d2, 1.0)
    np.fill_diagonal(diff, 0.0)
    return np.sum(diff / d2, axis=1) - (n - 1) * z


def project_feasible(z: complex, region: Region) -> complex:
    """Nearest feasible point in the closed unit disk minus the hole.

    Points beyond the disk clamp radially; points inside the hole map
    to its boundary, by the closed-form nearest-point rule where one
    exists (disk, annulus) and otherwise by bisection along the ray
    from the hole's anchor.  Ambiguous ties break deterministically
    toward direction +1 (so the center of a hole Disk(0, s) maps
    to +s).
    """
    return complex(_project_many(np.asarray([z], dtype=complex), region)[0])


def _hole_boundary_map(z: np.ndarray, region: Region) -> np.ndarray:
    from ginhole.geometry import Annulus, Disk

    # the hole is open, so land a hair outside it: rounding in the unit
    # direction must not leave the snapped point an ulp inside
    out_nudge = 1.0 + 1e-14
    if isinstance(region, Disk):
        v = z - region.center
        av = np.abs(v)
        dirs = np.where(av == 0.0, 1.0 + 0j, v / np.where(av == 0.0, 1.0, av))
        return region.center + region.radius * out_nudge * dirs
    if isinstance(region, Annulus):
        av = np.abs(z)
        # interior of the ring: snap to the nearer circle, ties outward
        target = np.where(av - region.inner < region.outer - av,
                          region.inner / out_nudge, region.outer * out_nudge)
        dirs = np.where(av == 0.0, 1.0 + 0j, z / np.where(av == 0.0, 1.0, av))
        return target * dirs
    return _ray_exit(z, region)


def _ray_exit(z: np.ndarray, region: Region) -> np.ndarray:
    anchor = region.anchor()
    v = z - anchor
    av = np.abs(v)
    dirs = np.where(av == 0.0, 1.0 + 0j, v / np.where(av == 0.0, 1.0, av))
    lo = av.copy()
    hi = av + region.max_abs() + abs(anchor) + 1.0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        inside = np.asarray(region.contains(anchor + mid * dirs), dtype=bool)
        lo = np.where(inside, mid, lo)
        hi = np.where(inside, hi, mid)
    return anchor + hi * dirs


def _project_many(z: np.ndarray, region: Region) -> np.ndarray:
    az = np.abs(z)
    out = np.where(az > 1.0, z / np.where(az == 0.0, 1.0, az), z)
    if not isinstance(region, EmptyRegion):
        inside = np.asarray(region.contains(out), dtype=bool)
        if np.any(inside):
            out = out.copy()
            out[inside] = _hole_boundary_map(out[inside], region)
    return out


# ---------------------------------------------------------------------------
# initialization: stratified draws from the equilibrium measure


def _sunflower_disk(n: int, rng) -> np.ndarray:
    k = np.arange(n) + 0.5
    r = np.sqrt(k / n)
    golden = math.pi * (3.0 - math.sqrt(5.0))
    th = k * golden + rng.uniform(0.0, 2.0 * math.pi)
    th += rng.normal(scale=0.5 / max(n, 1), size=n)
    return r * np.exp(1j * th)


def _bulk_points(region: Region, n: int, rng) -> np.ndarray:
    pts = _sunflower_disk(n, rng)
    if isinstance(region, EmptyRegion):
        return pts
    keep = ~np.asarray(region.contains(pts), dtype=bool)
    pts = pts[keep]
    while len(pts) < n:
        m = 4 * (n - len(pts)) + 16
        cand = np.sqrt(rng.uniform(size=m)) * np.exp(2j * math.pi * rng.uniform(size=m))
        cand = cand[~np.asarray(region.contains(cand), dtype=bool)]
        pts = np.concatenate([pts, cand])
    return pts[:n]


def _boundary_points(measure: BoundaryMeasure, region: Region, n: int,
                     rng) -> np.ndarray:
    comps = region.boundary()
    masses = np.array([measure.mass(ci) for ci in range(len(comps))])
    counts = np.floor(n * masses / masses.sum()).astype(int)
    while counts.sum() < n:
        counts[int(np.argmax(masses / (counts + 1)))] += 1
    out = []
    grid = np.linspace(0.0, 1.0, 4096, endpoint=False)
    for ci, cnt in enumerate(counts):
        if cnt == 0:
            continue
        dens = np.maximum(measure.density_along(ci, grid), 0.0)
        cdf = np.cumsum(dens)
        cdf = cdf / cdf[-1]
        u = (np.arange(cnt) + rng.uniform(size=cnt)) / cnt
        t = np.interp(u, cdf, grid + 1.0 / len(grid))
        pt, _ = boundary_point(region, ci, t)
        out.append(pt)
    return np.concatenate(out) if out else np.empty(0, dtype=complex)


def _initial_points(region: Region, n: int, rng) -> np.ndarray:
    if isinstance(region, EmptyRegion) or not has_density(region):
        z = _bulk_points(region, n, rng)
    else:
        nu2 = balayage_closed(region)
        n_bdy = int(round(n * nu2.mass()))
        n_bdy = min(max(n_bdy, 0), n)
        z = np.concatenate([
            _bulk_points(region, n - n_bdy, rng),
            _boundary_points(nu2, region, n_bdy, rng),
        ])
    return _project_many(z, region)


# ---------------------------------------------------------------------------
# optimizer


@dataclass(frozen=True, eq=False)
class FeketeReport:
    """Best-of-restarts Fekete optimization summary.

    ``r_estimate`` = -(2/(n(n-1))) * value increases toward R_U;
    ``delta_n`` = exp(-r_estimate) decreases toward exp(-R_U);
    ``restart_values`` lists each restart's final value in run order.
    """

    configuration: PointConfiguration
    delta_n: float
    r_estimate: float
    min_separation: float
    restarts_used: int
    iterations: int
    restart_values: tuple


def exchange_gains(z: np.ndarray, candidates: np.ndarray) -> np.ndarray:
    """Objective change from moving point i to candidate w, for all (w, i).

    Returns the (len(candidates), len(z)) matrix of gains; coincident
    placements count as -inf.
    """
    z = np.asarray(z, dtype=complex)
    w = np.asarray(candidates, dtype=complex)
    n = len(z)
    with np.errstate(divide="ignore"):
        logs = np.log(np.abs(w[:, None] - z[None, :]))
        d = np.abs(z[:, None] - z[None, :])
        np.fill_diagonal(d, 1.0)
        row = np.sum(np.log(d), axis=1) - 0.5 * (n - 1) * np.abs(z) ** 2
    s = np.sum(logs, axis=1) - 0.5 * (n - 1) * np.abs(w) ** 2
    gain = (s[:, None] - logs) - row[None, :]
    return np.where(np.isfinite(gain), gain, -np.inf)


def _exchange_polish(z: np.ndarray, region: Region, rng,
                     rounds: int = 40) -> tuple[np.ndarray, bool]:
    """Replace single points by better feasible candidates, if any."""
    improved_any = False
    for _ in range(rounds):
        m = max(4 * len(z), 256)
        cand = np.sqrt(rng.uniform(size=m)) * np.exp(2j * math.pi * rng.uniform(size=m))
        cand = _project_many(cand, region)
        gain = exchange_gains(z, cand)
        j, i = np.unravel_index(int(np.argmax(gain)), gain.shape)
        if gain[j, i] <= 1e-10:
            return z, improved_any
        z = z.copy()
        z[i] = cand[j]
        improved_any = True
    return z, improved_any


def _ascend(z: np.ndarray, region: Region, max_iters: int,
            ftol: float = 1e-12) -> tuple[np.ndarray, float, int]:
    val = weighted_log_product(z)
    step = 0.1 / max(len(z) - 1, 1)
    iters = 0
    for iters in range(1, max_iters + 1):
        g = ascent_direction(z)
        gmax = float(np.max(np.abs(g)))
        if gmax == 0.0:
            break
        sep = min_separation(z)
        t = min(step, 0.5 * sep / gmax)
        accepted = False
        for _ in range(40):
            znew = _project_many(z + t * g, region)
            vnew = weighted_log_product(znew)
            if vnew > val:
                accepted = True
                break
            t *= 0.5
        if not accepted:
            break
        gain = vnew - val
        z, val = znew, vnew
        step = min(2.0 * t, 1.0)
        if gain < ftol * (1.0 + abs(val)):
            break
    return z, val, iters


def _one_restart(region: Region, n: int, seed: int, idx: int,
                 max_iters: int) -> tuple[np.ndarray, float, int]:
    rng = np.random.default_rng([seed, idx])
    z = _initial_points(region, n, rng)
    z, val, iters = _ascend(z, region, max_iters)
    for _ in range(6):
        z2, improved = _exchange_polish(z, region, rng)
        if not improved:
            break
        z, val, more = _ascend(z2, region, max_iters)
        iters += more
    return z, val, iters


def optimize(region: Region, n: int, seed: int = 0, restarts: int = 8,
             max_iters: int = 2000, threads: int = 1) -> FeketeReport:
    """Best-of-restarts projected ascent for the weighted Fekete points.

    Each restart draws a stratified start from the equilibrium measure
    (bulk plus swept boundary mass when the closed-form density is
    known, uniform otherwise), ascends with backtracking steps capped
    at half the minimum separation, then polishes with single-point
    exchanges.  Restarts are deterministic per (seed, index) and may
    run on several threads; the reported best never decreases as
    restarts accumulate.
    """
    if n < 2:
        raise ValueError("need at least two points")
    if restarts < 1:
        raise ValueError("need at least one restart")
    if not isinstance(region, EmptyRegion):
        if not fits_in_unit_disk(region):
            raise ValueError("hole must fit in the closed unit disk")
        if region.area() >= math.pi * (1.0 - 1e-9):
            raise ValueError("hole covers the disk; feasible set has "
                             "no interior")
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            runs = list(pool.map(
                lambda i: _one_restart(region, n, seed, i, max_iters),
                range(restarts)))
    else:
        runs = [_one_restart(region, n, seed, i, max_iters)
                for i in range(restarts)]
    values = tuple(v for _, v, _ in runs)
    best = int(np.argmax(values))
    z, val, _ = runs[best]
    total_iters = sum(it for _, _, it in runs)
    config = configuration(z, region)
    r_est = -2.0 * val / (n * (n - 1))
    return FeketeReport(configuration=config, delta_n=math.exp(-r_est),
                        r_estimate=r_est, min_separation=min_separation(z),
                        restarts_used=restarts, iterations=total_iters,
                        restart_values=values)


def rate_study(region: Region, n_list, seed: int = 0, restarts: int = 8,
               max_iters: int = 2000, threads: int = 1):
    """Fekete route to R_U: optimize along n_list and extrapolate.

    Fits r_estimate(n) = R - alpha log(n)/n - beta/n over the given
    orders and returns (((n, r_estimate), ...), R).  Needs at least
    three orders.
    """
    orders = [int(v) for v in n_list]
    if len(orders) < 3:
        raise ValueError("need at least three orders to extrapolate")
    if any(b <= a for a, b in zip(orders, orders[1:])):
        raise ValueError("orders must be increasing")
    seq = []
    for nn in orders:
        rep = optimize(region, nn, seed=seed, restarts=restarts,
                       max_iters=max_iters, threads=threads)
        seq.append((nn, rep.r_estimate))
    ns = np.asarray(orders, dtype=float)
    design = np.stack([np.ones_like(ns), np.log(ns) / ns, 1.0 / ns], axis=1)
    coef, *_ = np.linalg.lstsq(design, np.asarray([v for _, v in seq]),
                               rcond=None)
    return tuple(seq), float(coef[0])

"""Numerical sweep of a hole's area measure onto its boundary.

Given a region U inside the open unit disk, the solver finds the boundary
measure nu2 that carries the mass of (1/pi) m restricted to U while
reproducing its logarithmic potential off U.  The density is expanded in
truncated trigonometric series per boundary piece and determined in the
least-squares sense by

* moment equations: integral of w^n d nu2 = (1/pi) integral of w^n over U
  for n = 0..M (real and imaginary parts), rows balanced by scale^(-n);
* collocation equations, one block per bounded component of the
  complement (such as the hole of an annulus): the potential of nu2
  equals the potential of the swept area measure at interior probe
  points.  Moments alone cannot see how mass splits between an outer and
  an inner curve, since all positive-order moments of any such split
  vanish; the collocation rows restore uniqueness.

The hole-rate constant then follows from the swept measure alone:

    R_U = 3/4 + (1/2) [ integral |z|^2 d nu2 - (1/pi) integral_U |z|^2 dm ].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ginhole.densities import BoundaryMeasure, basis_matrix, piece_nodes
from ginhole.geometry import (
    Disk,
    EmptyRegion,
    QuadratureRule,
    Region,
    fits_in_unit_disk,
    integrate,
    quadrature_nodes,
)
from ginhole.potentials import (
    AreaPart,
    PlanarMeasure,
    area_log_integral,
    boundary_potential,
    potential_at,
)

EMPTY_SET_RATE = 0.75


@dataclass(frozen=True)
class BalayageSolution:
    """Swept boundary measure plus solve diagnostics."""

    region: Region
    measure: BoundaryMeasure
    moment_residual: float
    collocation_residual: float
    r_u: float
    condition: float
    rank: int
    converged: bool

    def component_masses(self) -> list:
        comps = self.region.boundary()
        return [self.measure.mass(ci) for ci in range(len(comps))]

    def inner_fraction(self) -> float:
        """Mass fraction on hole-facing components (all but component 0)."""
        masses = self.component_masses()
        total = sum(masses)
        return sum(masses[1:]) / total if total else 0.0


def _area_moments(region: Region, max_order: int, rule: QuadratureRule):
    """(1/pi) integral of z^n over the region for n = 0..max_order."""
    prev = None
    for level in range(rule.max_doublings + 1):
        z, w = quadrature_nodes(region, rule, level)
        powers = np.empty((max_order + 1, len(z)), dtype=complex)
        powers[0] = 1.0
        for n in range(1, max_order + 1):
            powers[n] = powers[n - 1] * z
        vals = powers @ w / math.pi
        if prev is not None and float(np.max(np.abs(vals - prev))) <= rule.tol:
            return vals
        prev = vals
    return prev


def boundary_moment(measure: BoundaryMeasure, region: Region, n: int) -> complex:
    """integral of w^n d nu over the region's boundary curves."""
    if n < 0:
        raise ValueError("moment order must be nonnegative")
    return measure.moment(n)


def _basis_arrays(region: Region, n_modes: int, npts: int):
    """Per piece: (u, w, points, basis matrix) for assembly quadrature."""
    out = []
    for ci, comp in enumerate(region.boundary()):
        for pi, piece in enumerate(comp.pieces):
            u, w = piece_nodes(piece, npts)
            out.append({
                "ci": ci, "pi": pi,
                "points": piece.point(u),
                "weights": w,
                "basis": basis_matrix(u, n_modes, piece.closed),
            })
    return out


def solve_balayage(region: Region, modes: int = 16, moments: int = 48,
                   collocation: int = 16, rule: QuadratureRule | None = None,
                   rcond: float = 1e-12) -> BalayageSolution:
    """Solve for the swept boundary measure of (1/pi) m restricted to U.

    ``modes`` is the trig truncation per boundary piece, ``moments`` the
    highest matched moment order, ``collocation`` the number of potential
    probes per bounded complement component (placed on a circle of half
    the hole's inradius).  Returns the measure with residuals, the rate
    constant, and the conditioning of the regularized least squares.
    """
    if isinstance(region, EmptyRegion):
        raise ValueError("the empty region has no boundary to sweep onto")
    if not fits_in_unit_disk(region, strict=True):
        raise ValueError("region closure must lie inside the open unit disk")
    if moments < 2 * modes + 1:
        raise ValueError("moments must be at least 2*modes + 1")
    rule = rule or QuadratureRule()

    scale = region.max_abs()
    npts = max(1024, 4 * (moments + 2 * modes + 16))
    pieces = _basis_arrays(region, modes, npts)
    n_per = 2 * modes + 1
    n_unknown = n_per * len(pieces)

    target = _area_moments(region, moments, rule)

    # moment block: real and imaginary rows for each order, scaled by
    # scale^(-n) so all rows carry comparable magnitude
    rows = []
    rhs = []
    weights = np.power(scale, -np.arange(moments + 1))
    mom = np.zeros((moments + 1, n_unknown), dtype=complex)
    for j, blk in enumerate(pieces):
        pts, w, basis = blk["points"], blk["weights"], blk["basis"]
        powers = np.ones(len(pts), dtype=complex)
        cols = slice(j * n_per, (j + 1) * n_per)
        for n in range(moments + 1):
            mom[n, cols] = (w * powers) @ basis
            powers = powers * pts
    for n in range(moments + 1):
        rows.append(np.real(mom[n]) * weights[n])
        rhs.append(float(np.real(target[n])) * weights[n])
        rows.append(np.imag(mom[n]) * weights[n])
        rhs.append(float(np.imag(target[n])) * weights[n])

    # collocation block: one set of probes per bounded complement component
    probes = []
    for center, inradius in region.holes():
        angles = 2.0 * math.pi * np.arange(collocation) / collocation
        probes.extend(center + 0.5 * inradius * np.exp(1j * angles))
    coll = np.zeros((len(probes), n_unknown))
    coll_rhs = np.empty(len(probes))
    if probes:
        zp = np.asarray(probes)
        coll_rhs = -np.atleast_1d(area_log_integral(region, zp)) / math.pi
        for j, blk in enumerate(pieces):
            pts, w, basis = blk["points"], blk["weights"], blk["basis"]
            cols = slice(j * n_per, (j + 1) * n_per)
            logk = np.log(np.abs(zp[:, None] - pts[None, :]))
            coll[:, cols] = -(logk * w[None, :]) @ basis
        for row, r in zip(coll, coll_rhs):
            rows.append(row)
            rhs.append(r)

    a = np.vstack(rows)
    b = np.asarray(rhs)
    x, _, rank, sv = np.linalg.lstsq(a, b, rcond=rcond)
    kept = sv[sv > rcond * sv[0]]
    condition = float(sv[0] / kept[-1]) if len(kept) else math.inf

    comps = region.boundary()
    coeffs = []
    for ci, comp in enumerate(comps):
        row = []
        for pi in range(len(comp.pieces)):
            j = next(k for k, blk in enumerate(pieces)
                     if blk["ci"] == ci and blk["pi"] == pi)
            row.append(x[j * n_per:(j + 1) * n_per].copy())
        coeffs.append(tuple(row))
    measure = BoundaryMeasure(region, tuple(coeffs))

    got = mom @ x
    moment_residual = float(np.max(np.abs(got - target)))
    collocation_residual = float(np.max(np.abs(coll @ x - coll_rhs))) if probes else 0.0

    r_u = r_u_from_measure(region, measure, rule)
    converged = moment_residual <= 1e-3 and collocation_residual <= 1e-3
    return BalayageSolution(region=region, measure=measure,
                            moment_residual=moment_residual,
                            collocation_residual=collocation_residual,
                            r_u=r_u, condition=condition, rank=int(rank),
                            converged=converged)


def r_u_from_measure(region: Region, nu2: BoundaryMeasure,
                     rule: QuadratureRule | None = None) -> float:
    """Hole-rate constant from a swept boundary measure.

    R_U = 3/4 + (1/2)[ integral |z|^2 d nu2 - (1/pi) integral_U |z|^2 dm ].
    The measure's mass must match area(U)/pi within 1e-6.
    """
    if isinstance(region, EmptyRegion):
        return EMPTY_SET_RATE
    rule = rule or QuadratureRule()
    expected = region.area() / math.pi
    if abs(nu2.mass() - expected) > 1e-6:
        raise ValueError(f"measure mass {nu2.mass():.9g} does not match "
                         f"area/pi = {expected:.9g}")
    f2, _ = integrate(region, lambda z: np.abs(z) ** 2, rule)
    return EMPTY_SET_RATE + 0.5 * (nu2.second_abs_moment() - float(np.real(f2)) / math.pi)


def potential_match_residual(solution, region: Region, test_points) -> float:
    """Max gap between the swept measure's potential and the area potential.

    Test points must lie outside the closure of U (at least 1e-6 from its
    boundary); a point inside U or hugging the boundary is an error.
    """
    measure = solution.measure if isinstance(solution, BalayageSolution) else solution
    z = np.asarray(test_points, dtype=complex).ravel()
    if np.any(region.contains(z)):
        raise ValueError("test points must lie outside the region")
    from ginhole.potentials import _min_curve_distances
    if np.any(_min_curve_distances(region, z) < 1e-6):
        raise ValueError("test points must keep a 1e-6 distance from the boundary")
    p_swept = np.atleast_1d(boundary_potential(measure, z))
    p_area = -np.atleast_1d(area_log_integral(region, z)) / math.pi
    return float(np.max(np.abs(p_swept - p_area)))


# ---------------------------------------------------------------------------
# equilibrium witness


def witness_values(region: Region, nu2: BoundaryMeasure, z) -> np.ndarray:
    """p_nu(z) + |z|^2 / 2 for nu = (1/pi) m on (closed unit disk minus U) + nu2.

    Equals 1/2 on the support of nu and stays above 1/2 - epsilon
    quasi-everywhere on the complement of U.
    """
    zarr = np.atleast_1d(np.asarray(z, dtype=complex))
    nu = PlanarMeasure(
        area_parts=(AreaPart(Disk(0j, 1.0), 1.0 / math.pi),
                    AreaPart(region, -1.0 / math.pi)),
        boundary_parts=(nu2,),
    )
    return potential_at(nu, zarr) + 0.5 * np.abs(zarr) ** 2


def witness_samples(region: Region, n_support: int = 100,
                    n_complement: int = 100, seed: int = 0,
                    margin: float = 1e-3):
    """Sample points of supp(nu) = (unit disk minus U) and of U^c.

    Support samples are drawn uniformly from the closed unit disk with
    points of U (and a small guard band around its boundary and around
    the origin-centered unit circle) rejected.  Complement samples are
    drawn from the disk of radius 2 with U rejected, so they include both
    support points (where equality holds) and exterior points (where the
    witness exceeds the constant).
    """
    from ginhole.potentials import _min_curve_distances
    rng = np.random.default_rng(seed)

    def draw(limit: float, keep_inside_disk: bool):
        out = []
        while len(out) < (n_support if keep_inside_disk else n_complement):
            z = (rng.uniform(-limit, limit, 256)
                 + 1j * rng.uniform(-limit, limit, 256))
            z = z[np.abs(z) <= (1.0 if keep_inside_disk else limit)]
            z = z[~region.contains(z)]
            if len(z):
                z = z[_min_curve_distances(region, z) >= margin]
            out.extend(z.tolist())
        return np.asarray(out[:(n_support if keep_inside_disk else n_complement)])

    return draw(1.0, True), draw(2.0, False)

"""Logarithmic potentials and weighted energies of planar measures.

A :class:`PlanarMeasure` is a finite signed combination of

* constant-density area parts on regions (density w.r.t. planar Lebesgue
  measure, possibly negative so that set differences like "unit disk minus
  a hole" are expressible),
* boundary parts (:class:`~ginhole.densities.BoundaryMeasure`), and
* point masses.

``potential`` evaluates p(z) = -integral log|z-w| dmu(w), vectorized over
z.  Disk and annulus area parts and circle boundary pieces use exact
closed forms (Newton-shell values inside/outside); general area parts are
reduced to smooth 1D boundary integrals through the divergence identity

    int_U log|z-w| dm(w) = sum over boundary pieces of
        sign * int (2 log|b(u)-z| - 1)/4 * Re[i conj(b'(u)) (b(u)-z)] du,

which is valid for z inside, outside, or on the closure of U (the radial
primitive G(r) = r^2 (2 log r - 1)/4 of the log kernel is C^1 at r = 0,
so no residual singular term appears).  On-curve values of boundary-part
potentials use spectral log subtraction: the periodic singularity is
split off as log|2 sin(pi (u - u0))| and integrated exactly against the
trigonometric density mode by mode.

``log_energy`` and ``weighted_energy`` assemble pairwise interaction
energies, choosing for each pair the integration side on which the other
part's potential is smooth (a contained region sees the containing
region's potential smoothly; curves see area potentials through the
on-curve divergence identity).  All pairings of disks, annuli, and
circles reduce to closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ginhole.densities import BoundaryMeasure, constant_measure, piece_nodes
from ginhole.geometry import (
    Annulus,
    ConvergenceError,
    Disk,
    EmptyRegion,
    QuadratureRule,
    Region,
    integrate,
    quadrature_nodes,
)

TWO_PI = 2.0 * math.pi
_CHUNK = 512  # evaluation points per block in kernel matrices


class EvaluationError(ValueError):
    """Potential evaluation requested at an unusable location."""


@dataclass(frozen=True)
class AreaPart:
    """Constant-density area component; density is w.r.t. planar Lebesgue measure."""

    region: Region
    density: float

    def mass(self) -> float:
        return self.density * self.region.area()


@dataclass(frozen=True)
class PointPart:
    location: complex
    mass: float


@dataclass(frozen=True)
class PlanarMeasure:
    """Signed combination of area parts, boundary parts, and point masses."""

    area_parts: tuple = ()
    boundary_parts: tuple = ()
    point_parts: tuple = ()

    def total_mass(self) -> float:
        total = sum(p.mass() for p in self.area_parts)
        total += sum(b.mass() for b in self.boundary_parts)
        total += sum(p.mass for p in self.point_parts)
        return total


@dataclass(frozen=True)
class EnergyReport:
    """Weighted-energy breakdown: weighted_energy = log_energy + field_term."""

    log_energy: float      # double integral of log(1/|z-w|) dmu dmu
    field_term: float      # integral of |z|^2 dmu
    weighted_energy: float
    error_estimate: float


# ---------------------------------------------------------------------------
# closed forms


def _disk_log_integral(center: complex, radius: float, z: np.ndarray) -> np.ndarray:
    """integral over the disk of log|z-w| dm(w), exact (Newton shells)."""
    r = np.abs(np.asarray(z, dtype=complex) - center)
    out = np.empty(r.shape, dtype=float)
    outside = r >= radius
    with np.errstate(divide="ignore"):
        out[outside] = math.pi * radius**2 * np.log(r[outside])
    inside = ~outside
    out[inside] = (math.pi * radius**2 * (math.log(radius) - 0.5)
                   + 0.5 * math.pi * r[inside] ** 2)
    return out


def _disk_pair_log(a: float, b: float) -> float:
    """double integral of log|z-w| over concentric disks of radii a, b."""
    if a > b:
        a, b = b, a
    return (math.pi**2 * a**2 * b**2 * (math.log(b) - 0.5)
            + math.pi**2 * a**4 / 4.0)


def _area_self_log(region: Region):
    """double integral of log|z-w| dm dm over region x region, or None."""
    if isinstance(region, Disk):
        r = region.radius
        return math.pi**2 * r**4 * (math.log(r) - 0.25)
    if isinstance(region, Annulus):
        a, b = region.inner, region.outer
        return _disk_pair_log(b, b) - 2.0 * _disk_pair_log(a, b) + _disk_pair_log(a, a)
    return None


def _circle_data(region: Region, component: int):
    """(center, radius) when the component is a full circle, else None."""
    if isinstance(region, Disk) and component == 0:
        return region.center, region.radius
    if isinstance(region, Annulus):
        return 0j, (region.outer if component == 0 else region.inner)
    return None


def circle_trig_potential(center: complex, radius: float, coeff: np.ndarray,
                          z: np.ndarray) -> np.ndarray:
    """Potential of a circle piece carrying a trigonometric density, exact.

    ``coeff`` is the per-parameter density [c0, a1, b1, ...]; the measure
    is rho(u) du on the circle center + radius * exp(2 pi i u).  Values on
    the circle itself are the (continuous) boundary limit.
    """
    coeff = np.asarray(coeff, float)
    zeta = np.asarray(z, dtype=complex) - center
    r = np.abs(zeta)
    c0 = coeff[0]
    n_modes = (len(coeff) - 1) // 2
    out = np.empty(r.shape, dtype=float)
    outside = r >= radius
    inside = ~outside
    with np.errstate(divide="ignore"):
        out[outside] = -c0 * np.log(r[outside])
    out[inside] = -c0 * math.log(radius)
    # complex density modes rho_m = (a_m + i b_m)/2 multiplying e^{im theta}
    for m in range(1, n_modes + 1):
        rho_m = 0.5 * (coeff[2 * m - 1] + 1j * coeff[2 * m])
        if rho_m == 0:
            continue
        out[outside] += (radius**m / m) * np.real(rho_m / zeta[outside] ** m)
        out[inside] += np.real(zeta[inside] ** m * np.conj(rho_m)) / (m * radius**m)
    return out


def _circle_self_energy(radius: float, coeff: np.ndarray) -> float:
    """-double integral of log|z-w| for a trig density on one circle."""
    coeff = np.asarray(coeff, float)
    mass = coeff[0]
    val = mass**2 * math.log(radius)
    for k in range(1, (len(coeff) - 1) // 2 + 1):
        val -= (coeff[2 * k - 1] ** 2 + coeff[2 * k] ** 2) / (4.0 * k)
    return -val


# ---------------------------------------------------------------------------
# near-singular panel quadrature along one piece

_GL20 = np.polynomial.legendre.leggauss(20)


def _piece_scale(piece) -> float:
    u = (np.arange(64) + 0.5) / 64.0
    return float(np.mean(np.abs(piece.derivative(u))))


def _nearest_on_piece(piece, zflat: np.ndarray):
    """Per-point (u_star, distance) of the closest curve point, refined."""
    n_dense = 512
    if piece.closed:
        u = (np.arange(n_dense) + 0.5) / n_dense
    else:
        u = np.linspace(0.0, 1.0, n_dense)
    pts = piece.point(u)
    d = np.abs(zflat[:, None] - pts[None, :])
    jmin = np.argmin(d, axis=1)
    step = 1.0 / n_dense
    a = u[jmin] - step
    b = u[jmin] + step
    if not piece.closed:
        a = np.clip(a, 0.0, 1.0)
        b = np.clip(b, 0.0, 1.0)
    phi = (math.sqrt(5.0) - 1.0) / 2.0
    for _ in range(60):
        m1 = b - phi * (b - a)
        m2 = a + phi * (b - a)
        f1 = np.abs(piece.point(m1 % 1.0) - zflat)
        f2 = np.abs(piece.point(m2 % 1.0) - zflat)
        take = f1 < f2
        b = np.where(take, m2, b)
        a = np.where(take, a, m1)
    u_star = (0.5 * (a + b)) % 1.0 if piece.closed else 0.5 * (a + b)
    dist = np.abs(piece.point(u_star % 1.0) - zflat)
    dense_best = d[np.arange(len(zflat)), jmin]
    better = dense_best < dist
    u_star = np.where(better, u[jmin], u_star)
    dist = np.minimum(dist, dense_best)
    return u_star, dist


def _one_sided_panels(width: float, h: float):
    """Geometric breakpoints from width down to about h (offset magnitudes)."""
    if width <= 0.0:
        return []
    pts = [width]
    while pts[-1] > h and len(pts) < 64:
        pts.append(pts[-1] / 2.0)
    pts.append(0.0)
    return [(pts[k + 1], pts[k]) for k in range(len(pts) - 1)]


def _graded_nodes(piece, u_star: float, dist: float):
    """GL panel nodes on the piece, geometrically graded toward u_star."""
    scale = max(_piece_scale(piece), 1e-300)
    h = max(dist / scale, 1e-13)
    if piece.closed:
        sides = [(-1.0, 0.5), (1.0, 0.5)]
    else:
        sides = [(-1.0, u_star), (1.0, 1.0 - u_star)]
    xg, wg = _GL20
    us, ws = [], []
    for sign, width in sides:
        for lo, hi in _one_sided_panels(width, h):
            mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
            s = sign * (mid + half * xg)
            us.append(u_star + s)
            ws.append(np.full(xg.shape, half) * wg)
    u = np.concatenate(us)
    w = np.concatenate(ws)
    if piece.closed:
        u %= 1.0
    return u, w


# ---------------------------------------------------------------------------
# generic area potential via the boundary divergence identity


def _green_kernel(piece, u: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Rows: z, columns: u; integrand of the area-potential identity."""
    b = piece.point(u)
    conj_db = np.conj(piece.derivative(u))
    diff = b[None, :] - np.atleast_1d(z)[:, None]
    absd = np.abs(diff)
    with np.errstate(divide="ignore"):
        q = (2.0 * np.log(absd) - 1.0) * 0.25
    q = np.where(absd == 0.0, 0.0, q)  # integrand -> 0 at the base point
    return q * np.real(1j * conj_db[None, :] * diff)


def _piece_area_term(piece, zflat: np.ndarray, tol: float,
                     max_doublings: int, base_nodes: int) -> np.ndarray:
    """Per-piece boundary-identity integral, near points via graded panels."""
    out = np.zeros(zflat.shape, dtype=float)
    u_star, dist = _nearest_on_piece(piece, zflat)
    near = dist < 0.05 * max(_piece_scale(piece), 1e-300)
    for i in np.nonzero(near)[0]:
        u, w = _graded_nodes(piece, float(u_star[i]), float(dist[i]))
        out[i] = float((_green_kernel(piece, u, zflat[i:i + 1]) @ w)[0])
    far = np.nonzero(~near)[0]
    if len(far):
        zfar = zflat[far]
        prev = None
        for level in range(max_doublings + 1):
            u, w = piece_nodes(piece, base_nodes * (1 << level))
            vals = np.empty(len(far))
            for lo in range(0, len(far), _CHUNK):
                sl = slice(lo, lo + _CHUNK)
                vals[sl] = _green_kernel(piece, u, zfar[sl]) @ w
            if prev is not None and float(np.max(np.abs(vals - prev))) <= tol * max(1.0, float(np.max(np.abs(vals)))):
                break
            prev = vals
        else:
            raise ConvergenceError("area potential boundary integral did not converge")
        out[far] = vals
    return out


def area_log_integral(region: Region, z, method: str = "auto",
                      tol: float = 1e-12, max_doublings: int = 4,
                      base_nodes: int = 256):
    """integral over the region of log|z-w| dm(w), vectorized over z.

    Valid for z inside, outside, or on the boundary of the region;
    evaluation points close to the boundary switch to graded-panel
    quadrature automatically.  ``method``: "auto" uses disk/annulus
    closed forms when available and the boundary identity otherwise;
    "closed" demands a closed form; "quadrature" forces the
    boundary-identity route.
    """
    zarr = np.asarray(z, dtype=complex)
    scalar = zarr.ndim == 0
    zflat = np.atleast_1d(zarr).ravel()

    if isinstance(region, EmptyRegion):
        out = np.zeros(zflat.shape)
        return float(out[0]) if scalar else out.reshape(zarr.shape)

    if method != "quadrature":
        if isinstance(region, Disk):
            out = _disk_log_integral(region.center, region.radius, zflat)
            return float(out[0]) if scalar else out.reshape(zarr.shape)
        if isinstance(region, Annulus):
            out = (_disk_log_integral(0j, region.outer, zflat)
                   - _disk_log_integral(0j, region.inner, zflat))
            return float(out[0]) if scalar else out.reshape(zarr.shape)
        if method == "closed":
            raise EvaluationError(f"no closed-form area potential for {region.shape}")

    total = np.zeros(zflat.shape, dtype=float)
    for comp in region.boundary():
        for piece in comp.pieces:
            total += comp.outward_sign * _piece_area_term(
                piece, zflat, tol, max_doublings, base_nodes)
    return float(total[0]) if scalar else total.reshape(zarr.shape)


# ---------------------------------------------------------------------------
# boundary-part potentials


def boundary_potential(bm: BoundaryMeasure, z, method: str = "auto",
                       tol: float = 1e-12, max_doublings: int = 6,
                       base_nodes: int = 256):
    """Potential of a boundary measure at points z off its curves."""
    zarr = np.asarray(z, dtype=complex)
    scalar = zarr.ndim == 0
    zflat = np.atleast_1d(zarr).ravel()
    comps = bm.region.boundary()

    total = np.zeros(zflat.shape, dtype=float)
    pending = []
    for ci, comp in enumerate(comps):
        circ = _circle_data(bm.region, ci) if method != "quadrature" else None
        for pi in range(len(comp.pieces)):
            if circ is not None:
                total += circle_trig_potential(circ[0], circ[1],
                                               bm.coefficients[ci][pi], zflat)
            else:
                if method == "closed":
                    raise EvaluationError("no closed-form boundary potential for "
                                          f"{bm.region.shape} component {ci}")
                pending.append((ci, pi))

    for ci, pi in pending:
        piece = comps[ci].pieces[pi]
        u_star, dist = _nearest_on_piece(piece, zflat)
        near = dist < 0.05 * max(_piece_scale(piece), 1e-300)
        for i in np.nonzero(near)[0]:
            if dist[i] == 0.0:
                raise EvaluationError("boundary potential evaluated on its own "
                                      "curve; use the on-curve evaluator")
            u, w = _graded_nodes(piece, float(u_star[i]), float(dist[i]))
            rho = bm.piece_density(ci, pi, u)
            total[i] -= float(np.log(np.abs(piece.point(u) - zflat[i])) @ (w * rho))
        far = np.nonzero(~near)[0]
        if not len(far):
            continue
        zfar = zflat[far]
        prev = None
        for level in range(max_doublings + 1):
            u, w = piece_nodes(piece, base_nodes * (1 << level))
            rho = bm.piece_density(ci, pi, u)
            b = piece.point(u)
            wr = w * rho
            vals = np.empty(len(far))
            for lo in range(0, len(far), _CHUNK):
                sl = slice(lo, lo + _CHUNK)
                vals[sl] = -(np.log(np.abs(b[None, :] - zfar[sl, None])) @ wr)
            if prev is not None and float(np.max(np.abs(vals - prev))) <= tol * max(1.0, float(np.max(np.abs(vals)))):
                break
            prev = vals
        else:
            raise ConvergenceError("boundary potential quadrature did not converge")
        total[far] += vals

    return float(total[0]) if scalar else total.reshape(zarr.shape)


def boundary_potential_on_curve(bm: BoundaryMeasure, component: int, piece: int,
                                u0, n_nodes: int = 4096):
    """Potential of a boundary measure evaluated ON one of its own curves.

    Only closed (periodic) pieces support on-curve evaluation.  The log
    singularity is subtracted as log|2 sin(pi (u - u0))| and integrated
    exactly against the trigonometric density; the smooth remainder uses a
    midpoint grid shifted so u0 is a node, patched with its limit value
    log(|b'(u0)| / (2 pi)).
    """
    comps = bm.region.boundary()
    target = comps[component].pieces[piece]
    if not target.closed:
        raise EvaluationError("on-curve evaluation requires a closed boundary piece")
    u0arr = np.atleast_1d(np.asarray(u0, float)) % 1.0
    scalar = np.ndim(u0) == 0
    z0 = target.point(u0arr)

    out = np.zeros(u0arr.shape, dtype=float)
    # other pieces: z0 is off those curves, plain quadrature applies
    for cq, comp in enumerate(comps):
        for pq, other in enumerate(comp.pieces):
            if (cq, pq) == (component, piece):
                continue
            u, w = piece_nodes(other, n_nodes)
            rho = bm.piece_density(cq, pq, u)
            pts = other.point(u)
            out -= np.log(np.abs(pts[None, :] - z0[:, None])) @ (w * rho)

    coeff = bm.coefficients[component][piece]
    n_modes = (len(coeff) - 1) // 2
    dspeed = np.abs(target.derivative(u0arr))
    for i, (u_i, z_i) in enumerate(zip(u0arr, z0)):
        u = (u_i + np.arange(n_nodes) / n_nodes) % 1.0
        rho = bm.piece_density(component, piece, u)
        b = target.point(u)
        with np.errstate(divide="ignore", invalid="ignore"):
            g = np.log(np.abs(b - z_i) / np.abs(2.0 * np.sin(math.pi * (u - u_i))))
        g[0] = math.log(dspeed[i] / TWO_PI)
        out[i] -= float(np.mean(rho * g))
        for k in range(1, n_modes + 1):
            out[i] += (coeff[2 * k - 1] * math.cos(TWO_PI * k * u_i)
                       + coeff[2 * k] * math.sin(TWO_PI * k * u_i)) / (2.0 * k)
    return float(out[0]) if scalar else out


# ---------------------------------------------------------------------------
# full-measure potential


def _min_curve_distances(region: Region, zflat: np.ndarray) -> np.ndarray:
    """Refined minimum distance from each z to the region's boundary curves."""
    best = np.full(zflat.shape, np.inf)
    for comp in region.boundary():
        for piece in comp.pieces:
            _, d = _nearest_on_piece(piece, zflat)
            best = np.minimum(best, d)
    return best


def potential_at(measure: PlanarMeasure, z, method: str = "auto",
              tol: float = 1e-12, guard: float = 1e-12):
    """Potential p(z) = -integral log|z-w| dmu(w) of a planar measure.

    Evaluation is refused (:class:`EvaluationError`) when z lies within
    ``guard`` of a boundary part's curve or of a point mass; use
    :func:`boundary_potential_on_curve` for on-curve values.
    """
    zarr = np.asarray(z, dtype=complex)
    scalar = zarr.ndim == 0
    zflat = np.atleast_1d(zarr).ravel()

    for bm in measure.boundary_parts:
        d = _min_curve_distances(bm.region, zflat)
        if np.any(d < guard):
            raise EvaluationError("potential evaluation on a boundary support "
                                  "(distance below guard); use the on-curve evaluator")
    for pp in measure.point_parts:
        if np.any(np.abs(zflat - pp.location) < guard):
            raise EvaluationError("potential evaluation at a point mass")

    out = np.zeros(zflat.shape, dtype=float)
    for ap in measure.area_parts:
        out -= ap.density * np.atleast_1d(
            area_log_integral(ap.region, zflat, method=method, tol=tol))
    for bm in measure.boundary_parts:
        out += np.atleast_1d(boundary_potential(bm, zflat, method=method, tol=tol))
    for pp in measure.point_parts:
        out -= pp.mass * np.log(np.abs(zflat - pp.location))
    if scalar:
        return float(out[0])
    return out.reshape(zarr.shape)


# ---------------------------------------------------------------------------
# pairwise energies


def _region_contained(inner: Region, outer: Region) -> bool:
    """True when sample points of ``inner`` all lie inside ``outer``."""
    if isinstance(inner, EmptyRegion):
        return True
    if isinstance(outer, EmptyRegion):
        return False
    zq, _ = quadrature_nodes(inner, QuadratureRule(), 0)
    pts = [zq]
    for comp in inner.boundary():
        for piece in comp.pieces:
            pts.append(piece.point(np.linspace(0.0, 1.0, 64, endpoint=False)))
    return bool(np.all(outer.contains(np.concatenate(pts))))


def _area_potential_over_area(src: AreaPart, dst: AreaPart,
                              tol: float, max_doublings: int):
    """integral over dst (with its density) of the potential of src."""
    # a self-pair integrates the potential only at interior nodes,
    # where it is analytic, so the Gauss family applies
    smooth = (src is dst
              or isinstance(src.region, (Disk, Annulus))
              or _region_contained(dst.region, src.region))
    rule = QuadratureRule(scheme="gauss" if smooth else "midpoint")
    prev = None
    for level in range(max_doublings + 1):
        zq, wq = quadrature_nodes(dst.region, rule, level)
        pvals = -src.density * area_log_integral(src.region, zq, tol=min(tol, 1e-12))
        cur = dst.density * float(np.sum(wq * pvals))
        if prev is not None and abs(cur - prev) <= tol * max(1.0, abs(cur)):
            return cur, abs(cur - prev)
        prev = cur
    raise ConvergenceError("area-area energy refinement did not converge")


def _area_self_energy(ap: AreaPart, tol: float, max_doublings: int):
    closed = _area_self_log(ap.region)
    if closed is not None:
        return -ap.density**2 * closed, 0.0
    return _area_potential_over_area(ap, ap, tol, max_doublings)


def _curve_integral_of(bm: BoundaryMeasure, f, base_nodes: int = 512,
                       tol: float = 1e-11, max_doublings: int = 3):
    """integral of f(z) dnu by doubling refinement along the curves."""
    comps = bm.region.boundary()
    prev = None
    for level in range(max_doublings + 1):
        npts = base_nodes * (1 << level)
        total = 0.0
        for ci, comp in enumerate(comps):
            for pi, piece in enumerate(comp.pieces):
                u, w = piece_nodes(piece, npts)
                rho = bm.piece_density(ci, pi, u)
                total += float(np.sum(w * rho * f(piece.point(u))))
        if prev is not None and abs(total - prev) <= tol * max(1.0, abs(total)):
            return total, abs(total - prev)
        prev = total
    return prev, float("nan")


def _single_piece(bm: BoundaryMeasure, ci: int, pi: int) -> BoundaryMeasure:
    comps = bm.region.boundary()
    return BoundaryMeasure(bm.region, tuple(
        tuple(bm.coefficients[c][p] if (c, p) == (ci, pi)
              else np.zeros_like(bm.coefficients[c][p])
              for p in range(len(comps[c].pieces)))
        for c in range(len(comps))))


def _boundary_self_energy(bm: BoundaryMeasure, tol: float):
    """-double integral of log|z-w| dnu dnu for one boundary measure."""
    comps = bm.region.boundary()
    all_circles = all(_circle_data(bm.region, ci) is not None
                      for ci in range(len(comps)))
    if all_circles:
        total = 0.0
        for ci in range(len(comps)):
            _, radius = _circle_data(bm.region, ci)
            total += _circle_self_energy(radius, bm.coefficients[ci][0])
            for cj in range(len(comps)):
                if cj == ci:
                    continue
                cc, rc = _circle_data(bm.region, cj)
                def p_other(z, cc=cc, rc=rc, cj=cj):
                    return circle_trig_potential(cc, rc, bm.coefficients[cj][0], z)
                val, _ = _curve_integral_of(_single_piece(bm, ci, 0), p_other, tol=tol)
                total += val
        return total, 0.0

    prev = None
    for level in range(3):
        npts = 512 * (1 << level)
        total = 0.0
        for ci, comp in enumerate(comps):
            for pi, piece in enumerate(comp.pieces):
                if not piece.closed:
                    raise EvaluationError("self-energy of a boundary measure on "
                                          "open pieces is not supported")
                u, w = piece_nodes(piece, npts)
                rho = bm.piece_density(ci, pi, u)
                pvals = boundary_potential_on_curve(bm, ci, pi, u, n_nodes=4 * npts)
                total += float(np.sum(w * rho * pvals))
        if prev is not None and abs(total - prev) <= tol * max(1.0, abs(total)):
            return total, abs(total - prev)
        prev = total
    return total, abs(total - prev)


def log_energy(measure: PlanarMeasure, rule: QuadratureRule | None = None,
               tol: float = 1e-9, max_doublings: int = 4) -> float:
    """Interaction energy I(mu) = -double integral of log|z-w| dmu dmu.

    Point parts carry infinite self-energy and are refused.  Pairs of
    disk, annulus, and circle parts evaluate in closed form; pairs
    involving general regions fall back to refined quadrature with the
    smoother factor as the integrand.
    """
    value, _ = _log_energy(measure, rule, tol, max_doublings)
    return value


def _log_energy(measure: PlanarMeasure, rule: QuadratureRule | None = None,
                tol: float = 1e-9, max_doublings: int = 4) -> tuple[float, float]:
    """log_energy together with its accumulated error estimate."""
    if rule is not None:
        tol = min(tol, rule.tol)
    if measure.point_parts:
        raise EvaluationError("log-energy of a measure with point masses is infinite")

    total = 0.0
    err = 0.0
    areas = [ap for ap in measure.area_parts if not isinstance(ap.region, EmptyRegion)]
    bnds = list(measure.boundary_parts)

    for i, ap in enumerate(areas):
        v, e = _area_self_energy(ap, tol, max_doublings)
        total += v
        err += e
        for aq in areas[i + 1:]:
            # integrate over the contained region: its interior sees the
            # containing part's potential smoothly
            src, dst = ap, aq
            if _region_contained(ap.region, aq.region):
                src, dst = aq, ap
            v, e = _area_potential_over_area(src, dst, tol, max_doublings)
            total += 2.0 * v
            err += 2.0 * e

    for bi, bm in enumerate(bnds):
        v, e = _boundary_self_energy(bm, tol)
        total += v
        err += e
        for ap in areas:
            def p_area(z, ap=ap):
                return -ap.density * area_log_integral(ap.region, z, tol=1e-12)
            v, e = _curve_integral_of(bm, p_area, tol=tol)
            total += 2.0 * v
            err += 2.0 * e
        for other in bnds[bi + 1:]:
            def p_bnd(z, other=other):
                return boundary_potential(other, z, tol=1e-12)
            v, e = _curve_integral_of(bm, p_bnd, tol=tol)
            total += 2.0 * v
            err += 2.0 * e

    return total, err


def field_integral(measure: PlanarMeasure) -> float:
    """integral of |z|^2 dmu."""
    total = 0.0
    for ap in measure.area_parts:
        if isinstance(ap.region, EmptyRegion):
            continue
        val, _ = integrate(ap.region, lambda z: np.abs(z) ** 2, QuadratureRule())
        total += ap.density * float(np.real(val))
    for bm in measure.boundary_parts:
        total += bm.second_abs_moment()
    for pp in measure.point_parts:
        total += pp.mass * abs(pp.location) ** 2
    return total


def weighted_energy(measure: PlanarMeasure, rule: QuadratureRule | None = None,
                    tol: float = 1e-9) -> EnergyReport:
    """Rate functional R(mu) = I(mu) + int |z|^2 dmu with its breakdown."""
    interaction, err = _log_energy(measure, rule, tol=tol)
    field = field_integral(measure)
    return EnergyReport(log_energy=interaction, field_term=field,
                        weighted_energy=interaction + field, error_estimate=err)


# ---------------------------------------------------------------------------
# standard measures


def unit_disk_uniform() -> PlanarMeasure:
    """Uniform probability measure on the closed unit disk."""
    return PlanarMeasure(area_parts=(AreaPart(Disk(0j, 1.0), 1.0 / math.pi),))


def circle_uniform(radius: float, mass: float = 1.0) -> PlanarMeasure:
    """Uniform measure of given mass on the circle |z| = radius."""
    bm = constant_measure(Disk(0j, radius), [mass])
    return PlanarMeasure(boundary_parts=(bm,))


def equilibrium_candidate(region: Region, swept: BoundaryMeasure) -> PlanarMeasure:
    """The measure (1/pi) m on (unit disk minus the region) plus a swept part.

    With ``swept`` the balayage of (1/pi) m restricted to the region onto
    its boundary, this is the minimizer of the weighted energy over
    probability measures supported off the region's interior.
    """
    if isinstance(region, EmptyRegion):
        return unit_disk_uniform()
    return PlanarMeasure(
        area_parts=(AreaPart(Disk(0j, 1.0), 1.0 / math.pi),
                    AreaPart(region, -1.0 / math.pi)),
        boundary_parts=(swept,),
    )

"""Closed-form catalog: hole-rate excesses and balayage densities.

For a bounded open set U inside the unit disk, the hole-rate constant is
the minimal weighted logarithmic energy

    R_U = inf { E(nu) + int |z|^2 dnu : nu a probability measure on U^c },

and the empty set gives the global minimum R_empty = 3/4.  The catalog
stores the excess R'_U = R_U - 3/4 in closed form for the standard shapes,
together with the sweeping (balayage) of the uniform area measure
(1/pi) dm|_U onto the boundary where a closed-form density is known.

Shapes covered: disks (any center), origin-centered annuli, axis-aligned
ellipses, limacon ("cardioid") ovals, equilateral triangles centered at
the origin, and the upper half disk.  The annulus mass split between its
two circles and the large-radius decay slope of annular hole
probabilities are exposed separately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ginhole.densities import BoundaryMeasure
from ginhole.geometry import (
    Annulus,
    Cardioid,
    Disk,
    Ellipse,
    EmptyRegion,
    HalfDisk,
    Polygon,
    Region,
)


class NotInCatalogError(KeyError):
    """The region has no closed form for the requested quantity."""


EMPTY_SET_RATE = 0.75  # minimal weighted energy of the unconstrained problem


def annulus_lambda(inner: float, outer: float) -> float:
    """Fraction of the swept annulus mass landing on the inner circle.

    Evaluated as (expm1(2t) - 2t) / (2t expm1(2t)) with t = log(outer/inner),
    which is stable for thin annuli; the continuous extension at
    outer -> inner is 1/2.
    """
    if not 0 < inner <= outer <= 1.0:
        raise ValueError("need 0 < inner <= outer <= 1")
    t = math.log(outer / inner)
    if t == 0.0:
        return 0.5
    e = math.expm1(2.0 * t)
    return (e - 2.0 * t) / (2.0 * t * e)


def kostlan_slope_closed(c: float) -> float:
    """Large-r decay slope of log P[no eigenvalue in r*{c<|z|<1}] over r^4.

    Defined for 0 <= c < 1; the c -> 0 limit (full disk) is -1/4.
    """
    if not 0.0 <= c < 1.0:
        raise ValueError("need 0 <= c < 1")
    if c == 0.0:
        return -0.25
    s = 1.0 - c * c
    return -(s / 4.0) * (1.0 + c * c + s / math.log(c))


def _equilateral_scale(region: Polygon) -> float:
    """Scale a if the polygon is a*(cube roots of unity) up to rotation, else raise."""
    v = np.asarray(region.vertices, dtype=complex)
    if len(v) != 3:
        raise NotInCatalogError("catalog covers equilateral triangles only")
    radii = np.abs(v)
    a = float(radii.mean())
    centered = abs(complex(v.sum())) <= 1e-12 * max(1.0, a)
    if not centered or np.max(np.abs(radii - a)) > 1e-12 * max(1.0, a):
        raise NotInCatalogError("triangle must be equilateral and centered at 0")
    w = np.exp(2j * math.pi / 3)
    for rot in (v[0] / a, v[1] / a, v[2] / a):
        target = a * rot * np.array([1.0, w, w**2])
        if min(np.max(np.abs(v - np.roll(target, k))) for k in range(3)) <= 1e-10 * max(1.0, a):
            return a
    raise NotInCatalogError("triangle must be equilateral and centered at 0")


def r_prime_closed(region: Region) -> float:
    """Closed-form hole-rate excess R'_U = R_U - 3/4."""
    if isinstance(region, EmptyRegion):
        return 0.0
    if isinstance(region, Disk):
        return region.radius**4 / 4.0
    if isinstance(region, Annulus):
        a, b = region.inner, region.outer
        return (b**4 - a**4) / 4.0 - (b * b - a * a) ** 2 / (4.0 * math.log(b / a))
    if isinstance(region, Ellipse):
        a, b = region.semi_x, region.semi_y
        return (a * b) ** 3 / (2.0 * (a * a + b * b))
    if isinstance(region, Cardioid):
        a, b = region.bulge, region.size
        return (b**4 / 2.0) * (1.0 + a * a) ** 2 - b**4 / 4.0
    if isinstance(region, Polygon):
        a = _equilateral_scale(region)
        return a**4 * 9.0 * math.sqrt(3.0) / (160.0 * math.pi)
    if isinstance(region, HalfDisk):
        a = region.radius
        return (a**4 / 2.0) * (0.5 - 4.0 / math.pi**2)
    raise NotInCatalogError(f"no closed-form rate excess for {region.shape}")


def hole_rate(region: Region) -> float:
    """Closed-form hole-rate constant R_U = 3/4 + R'_U."""
    return EMPTY_SET_RATE + r_prime_closed(region)


def balayage_closed(region: Region) -> BoundaryMeasure:
    """Closed-form sweep of (1/pi) dm|_U onto the boundary.

    Densities are per piece parameter u in [0, 1]; total mass is
    area(U)/pi.  Known for disks, annuli, ellipses, and limacon ovals;
    the triangle and half disk have no catalog density.
    """
    if isinstance(region, Disk):
        m = region.radius**2
        return BoundaryMeasure(region, ((np.array([m]),),))
    if isinstance(region, Annulus):
        lam = annulus_lambda(region.inner, region.outer)
        total = region.outer**2 - region.inner**2
        outer = np.array([(1.0 - lam) * total])
        inner = np.array([lam * total])
        return BoundaryMeasure(region, ((outer,), (inner,)))
    if isinstance(region, Ellipse):
        a, b = region.semi_x, region.semi_y
        chi = (a * a - b * b) / (a * a + b * b)
        # rho(u) = ab * (1 - chi cos(4 pi u)): modes [const, cos1, sin1, cos2, sin2]
        coeff = np.array([a * b, 0.0, 0.0, -a * b * chi, 0.0])
        return BoundaryMeasure(region, ((coeff,),))
    if isinstance(region, Cardioid):
        a, b = region.bulge, region.size
        # rho(u) = b^2 (1 + 2 a^2) + 2 a b^2 cos(2 pi u)
        coeff = np.array([b * b * (1.0 + 2.0 * a * a), 2.0 * a * b * b, 0.0])
        return BoundaryMeasure(region, ((coeff,),))
    raise NotInCatalogError(f"no closed-form balayage density for {region.shape}")


def has_density(region: Region) -> bool:
    return isinstance(region, (Disk, Annulus, Ellipse, Cardioid))


def in_catalog(region: Region) -> bool:
    try:
        r_prime_closed(region)
        return True
    except NotInCatalogError:
        return False


@dataclass(frozen=True)
class ClosedFormEntry:
    """One catalog row: a concrete region with its closed-form data."""

    name: str
    region: Region
    rate_excess_formula: str
    r_prime_closed: float
    density_formula: str  # empty when no closed-form density is known


def catalog_entries() -> list[ClosedFormEntry]:
    """Reference catalog rows at standard parameters (used by the CLI table)."""
    rows = [
        ClosedFormEntry(
            "disk", Disk(0j, 0.5),
            "radius^4/4",
            r_prime_closed(Disk(0j, 0.5)),
            "radius^2/(2 pi) dtheta on the circle"),
        ClosedFormEntry(
            "translated disk", Disk(0.2 + 0.1j, 0.3),
            "radius^4/4 (center-independent)",
            r_prime_closed(Disk(0.2 + 0.1j, 0.3)),
            "radius^2/(2 pi) dtheta on the circle"),
        ClosedFormEntry(
            "annulus", Annulus(0.3, 0.6),
            "(outer^4-inner^4)/4 - (outer^2-inner^2)^2/(4 log(outer/inner))",
            r_prime_closed(Annulus(0.3, 0.6)),
            "uniform per circle; inner fraction lambda(inner, outer)"),
        ClosedFormEntry(
            "ellipse", Ellipse(0.6, 0.4),
            "(semi_x semi_y)^3 / (2 (semi_x^2 + semi_y^2))",
            r_prime_closed(Ellipse(0.6, 0.4)),
            "(semi_x semi_y/(2 pi)) (1 - ((semi_x^2-semi_y^2)/(semi_x^2+semi_y^2)) cos 2theta) dtheta"),
        ClosedFormEntry(
            "cardioid", Cardioid(0.2, 0.3),
            "(size^4/2)(1+bulge^2)^2 - size^4/4",
            r_prime_closed(Cardioid(0.2, 0.3)),
            "(size^2/(2 pi))(1 + 2 bulge^2 + 2 bulge cos theta) dtheta"),
        ClosedFormEntry(
            "equilateral triangle",
            Polygon(tuple(0.5 * np.exp(2j * math.pi * k / 3) for k in range(3))),
            "9 sqrt(3)/(160 pi) scale^4",
            triangle_r_prime(0.5),
            ""),
        ClosedFormEntry(
            "half disk", HalfDisk(0.8),
            "(radius^4/2)(1/2 - 4/pi^2)",
            r_prime_closed(HalfDisk(0.8)),
            ""),
    ]
    return rows


def triangle_r_prime(scale: float) -> float:
    """Rate excess of the origin-centered equilateral triangle at the given scale."""
    return scale**4 * 9.0 * math.sqrt(3.0) / (160.0 * math.pi)

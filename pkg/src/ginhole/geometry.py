"""Planar regions, boundary parameterizations, and shape-adapted quadrature.

The toolkit works with bounded open sets in the complex plane: disks,
origin-centered annuli, axis-aligned ellipses, limacon ovals in polar form
(tagged "cardioid"), simple polygons, the upper half disk, and
caller-supplied boundary data.  Every region can

* test membership (vectorized over complex arrays),
* parameterize each boundary component by t in [0, 1), split into smooth
  pieces traversed counterclockwise,
* produce shape-adapted tensor quadrature nodes at a ladder of refinement
  levels, and
* report structural data used elsewhere: radial bands for
  rotation-invariant shapes, bounded complement components ("holes"), an
  interior anchor point, and the outer scale max |z|.

Quadrature uses polar maps for disk/annulus/cardioid/half-disk, an
affine-mapped polar grid for the ellipse, and a signed centroid fan of
Duffy-type tensor cells for polygons.  ``integrate`` refines by doubling
both axes until two consecutive levels agree within tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from numpy.polynomial.legendre import leggauss

TWO_PI = 2.0 * math.pi


class InvalidRegionError(ValueError):
    """Shape parameters or region JSON failed validation."""


class ConvergenceError(RuntimeError):
    """Adaptive refinement exhausted its budget without meeting tolerance."""


@dataclass(frozen=True)
class BoundaryPiece:
    """One smooth piece of a boundary component, parameterized on [0, 1].

    ``point`` and ``derivative`` are vectorized maps of the piece parameter
    u in [0, 1]; ``closed`` marks a piece that is a smooth loop by itself.
    """

    point: Callable[[np.ndarray], np.ndarray]
    derivative: Callable[[np.ndarray], np.ndarray]
    closed: bool
    label: str = ""


@dataclass(frozen=True)
class BoundaryComponent:
    """A closed boundary curve made of consecutive smooth pieces.

    Traversal is counterclockwise for every component.  ``outward_sign`` is
    +1 when the region lies on the left of the traversal (outer curves) and
    -1 when it lies on the right (curves bounding holes of the complement,
    e.g. the inner circle of an annulus).
    """

    pieces: tuple[BoundaryPiece, ...]
    outward_sign: int = 1
    label: str = ""


class Region:
    """Base class for bounded open regions in the plane."""

    shape: str = "abstract"

    # -- membership and metrics -------------------------------------------
    def contains(self, z):
        """Vectorized strict-interior membership test."""
        raise NotImplementedError

    def area(self) -> float:
        raise NotImplementedError

    def max_abs(self) -> float:
        """sup |z| over the closure of the region."""
        raise NotImplementedError

    def anchor(self) -> complex:
        """A reference interior point (regions star-shaped about it where possible)."""
        raise NotImplementedError

    def scaled(self, s: float) -> "Region":
        """The dilated region s*U."""
        raise NotImplementedError

    # -- structure ----------------------------------------------------------
    def boundary(self) -> tuple[BoundaryComponent, ...]:
        raise NotImplementedError

    def radial_bands(self):
        """Radial decomposition [(inner, outer), ...] or None if not rotation-invariant."""
        return None

    def holes(self) -> list[tuple[complex, float]]:
        """Bounded components of the complement as (anchor, inradius) pairs."""
        return []

    def to_json(self) -> dict:
        raise NotImplementedError

    # -- conveniences --------------------------------------------------------
    def is_empty(self) -> bool:
        return False

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        fields = ", ".join(f"{k}={v!r}" for k, v in self.to_json().items() if k != "shape")
        return f"{type(self).__name__}({fields})"


def _as_complex_array(z):
    arr = np.asarray(z, dtype=complex)
    return arr, arr.ndim == 0


def _scalar_out(values, scalar):
    if scalar:
        return values[()] if isinstance(values, np.ndarray) else values
    return values


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidRegionError(message)


def _finite(*values: float) -> bool:
    return all(math.isfinite(v) for v in values)


@dataclass(frozen=True, repr=False)
class EmptyRegion(Region):
    """The empty region; its complement is the whole plane."""

    shape = "empty"

    def contains(self, z):
        arr, scalar = _as_complex_array(z)
        out = np.zeros(arr.shape, dtype=bool)
        return _scalar_out(out, scalar)

    def area(self) -> float:
        return 0.0

    def max_abs(self) -> float:
        return 0.0

    def anchor(self) -> complex:
        raise InvalidRegionError("the empty region has no interior anchor")

    def scaled(self, s: float) -> "EmptyRegion":
        return EmptyRegion()

    def boundary(self) -> tuple[BoundaryComponent, ...]:
        return ()

    def radial_bands(self):
        return []

    def to_json(self) -> dict:
        return {"shape": "empty"}


@dataclass(frozen=True, repr=False)
class Disk(Region):
    """Open disk with complex ``center`` and ``radius``."""

    center: complex
    radius: float
    shape = "disk"

    def __post_init__(self):
        _require(_finite(self.radius, self.center.real, self.center.imag),
                 "disk parameters must be finite")
        _require(self.radius > 0, "disk radius must be positive")

    def contains(self, z):
        arr, scalar = _as_complex_array(z)
        out = np.abs(arr - self.center) < self.radius
        return _scalar_out(out, scalar)

    def area(self) -> float:
        return math.pi * self.radius**2

    def max_abs(self) -> float:
        return abs(self.center) + self.radius

    def anchor(self) -> complex:
        return self.center

    def scaled(self, s: float) -> "Disk":
        return Disk(self.center * s, self.radius * s)

    def boundary(self) -> tuple[BoundaryComponent, ...]:
        c, r = self.center, self.radius

        def pt(u):
            return c + r * np.exp(1j * TWO_PI * np.asarray(u, float))

        def dv(u):
            return 1j * TWO_PI * r * np.exp(1j * TWO_PI * np.asarray(u, float))

        piece = BoundaryPiece(pt, dv, closed=True, label="circle")
        return (BoundaryComponent((piece,), outward_sign=1, label="outer"),)

    def radial_bands(self):
        if self.center == 0:
            return [(0.0, self.radius)]
        return None

    def to_json(self) -> dict:
        return {"shape": "disk",
                "center": [self.center.real, self.center.imag],
                "radius": self.radius}


@dataclass(frozen=True, repr=False)
class Annulus(Region):
    """Open annulus inner < |z| < outer, centered at the origin."""

    inner: float
    outer: float
    shape = "annulus"

    def __post_init__(self):
        _require(_finite(self.inner, self.outer), "annulus radii must be finite")
        _require(0 < self.inner < self.outer, "annulus requires 0 < inner < outer")

    def contains(self, z):
        arr, scalar = _as_complex_array(z)
        r = np.abs(arr)
        out = (r > self.inner) & (r < self.outer)
        return _scalar_out(out, scalar)

    def area(self) -> float:
        return math.pi * (self.outer**2 - self.inner**2)

    def max_abs(self) -> float:
        return self.outer

    def anchor(self) -> complex:
        return complex(0.5 * (self.inner + self.outer))

    def scaled(self, s: float) -> "Annulus":
        return Annulus(self.inner * s, self.outer * s)

    def boundary(self) -> tuple[BoundaryComponent, ...]:
        def circle(r):
            def pt(u):
                return r * np.exp(1j * TWO_PI * np.asarray(u, float))

            def dv(u):
                return 1j * TWO_PI * r * np.exp(1j * TWO_PI * np.asarray(u, float))

            return BoundaryPiece(pt, dv, closed=True, label="circle")

        return (
            BoundaryComponent((circle(self.outer),), outward_sign=1, label="outer"),
            BoundaryComponent((circle(self.inner),), outward_sign=-1, label="inner"),
        )

    def radial_bands(self):
        return [(self.inner, self.outer)]

    def holes(self) -> list[tuple[complex, float]]:
        return [(0j, self.inner)]

    def to_json(self) -> dict:
        return {"shape": "annulus", "inner": self.inner, "outer": self.outer}


@dataclass(frozen=True, repr=False)
class Ellipse(Region):
    """Open axis-aligned ellipse (x/semi_x)^2 + (y/semi_y)^2 < 1."""

    semi_x: float
    semi_y: float
    shape = "ellipse"

    def __post_init__(self):
        _require(_finite(self.semi_x, self.semi_y), "ellipse semi-axes must be finite")
        _require(self.semi_x > 0 and self.semi_y > 0, "ellipse semi-axes must be positive")

    def contains(self, z):
        arr, scalar = _as_complex_array(z)
        out = (arr.real / self.semi_x) ** 2 + (arr.imag / self.semi_y) ** 2 < 1.0
        return _scalar_out(out, scalar)

    def area(self) -> float:
        return math.pi * self.semi_x * self.semi_y

    def max_abs(self) -> float:
        return max(self.semi_x, self.semi_y)

    def anchor(self) -> complex:
        return 0j

    def scaled(self, s: float) -> "Ellipse":
        return Ellipse(self.semi_x * s, self.semi_y * s)

    def boundary(self) -> tuple[BoundaryComponent, ...]:
        a, b = self.semi_x, self.semi_y

        def pt(u):
            th = TWO_PI * np.asarray(u, float)
            return a * np.cos(th) + 1j * b * np.sin(th)

        def dv(u):
            th = TWO_PI * np.asarray(u, float)
            return TWO_PI * (-a * np.sin(th) + 1j * b * np.cos(th))

        piece = BoundaryPiece(pt, dv, closed=True, label="ellipse")
        return (BoundaryComponent((piece,), outward_sign=1, label="outer"),)

    def radial_bands(self):
        return [(0.0, self.semi_x)] if self.semi_x == self.semi_y else None

    def to_json(self) -> dict:
        return {"shape": "ellipse", "semi_x": self.semi_x, "semi_y": self.semi_y}


@dataclass(frozen=True, repr=False)
class Cardioid(Region):
    """Limacon oval in polar form: |z| < size * (1 + 2*bulge*cos(arg z)).

    ``bulge`` must stay below 1/2 so the polar radius is positive and the
    boundary is a simple closed curve star-shaped about the origin.
    """

    bulge: float
    size: float
    shape = "cardioid"

    def __post_init__(self):
        _require(_finite(self.bulge, self.size), "cardioid parameters must be finite")
        _require(self.size > 0, "cardioid size must be positive")
        _require(0 < self.bulge < 0.5, "cardioid bulge must lie in (0, 1/2)")

    def polar_radius(self, theta):
        return self.size * (1.0 + 2.0 * self.bulge * np.cos(theta))

    def contains(self, z):
        arr, scalar = _as_complex_array(z)
        out = np.abs(arr) < self.polar_radius(np.angle(arr))
        return _scalar_out(out, scalar)

    def area(self) -> float:
        return math.pi * self.size**2 * (1.0 + 2.0 * self.bulge**2)

    def max_abs(self) -> float:
        return self.size * (1.0 + 2.0 * self.bulge)

    def anchor(self) -> complex:
        return 0j

    def scaled(self, s: float) -> "Cardioid":
        return Cardioid(self.bulge, self.size * s)

    def boundary(self) -> tuple[BoundaryComponent, ...]:
        b, c = self.size, self.bulge

        def pt(u):
            th = TWO_PI * np.asarray(u, float)
            return b * (1.0 + 2.0 * c * np.cos(th)) * np.exp(1j * th)

        def dv(u):
            th = TWO_PI * np.asarray(u, float)
            rad = b * (1.0 + 2.0 * c * np.cos(th))
            drad = -2.0 * b * c * np.sin(th)
            return TWO_PI * (drad + 1j * rad) * np.exp(1j * th)

        piece = BoundaryPiece(pt, dv, closed=True, label="limacon")
        return (BoundaryComponent((piece,), outward_sign=1, label="outer"),)

    def to_json(self) -> dict:
        return {"shape": "cardioid", "bulge": self.bulge, "size": self.size}


def _shoelace(vertices: np.ndarray) -> float:
    x, y = vertices.real, vertices.imag
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def _segments_cross(p1, p2, q1, q2) -> bool:
    def orient(a, b, c):
        v = (b - a).real * (c - a).imag - (b - a).imag * (c - a).real
        return math.copysign(1.0, v) if v != 0 else 0.0

    o1, o2 = orient(p1, p2, q1), orient(p1, p2, q2)
    o3, o4 = orient(q1, q2, p1), orient(q1, q2, p2)
    return o1 != o2 and o3 != o4 and 0.0 not in (o1, o2, o3, o4)


@dataclass(frozen=True, repr=False)
class Polygon(Region):
    """Open simple polygon; vertices listed counterclockwise."""

    vertices: tuple
    shape = "polygon"

    def __post_init__(self):
        verts = tuple(complex(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        _require(len(verts) >= 3, "polygon needs at least 3 vertices")
        _require(all(_finite(v.real, v.imag) for v in verts),
                 "polygon vertices must be finite")
        arr = np.asarray(verts)
        _require(_shoelace(arr) > 0, "polygon vertices must be counterclockwise")
        m = len(verts)
        for i in range(m):
            for j in range(i + 1, m):
                if abs(i - j) in (1, m - 1):
                    continue
                if _segments_cross(verts[i], verts[(i + 1) % m],
                                   verts[j], verts[(j + 1) % m]):
                    raise InvalidRegionError("polygon must be simple (non-self-intersecting)")

    def _vert_array(self) -> np.ndarray:
        return np.asarray(self.vertices, dtype=complex)

    def contains(self, z):
        arr, scalar = _as_complex_array(z)
        x, y = arr.real, arr.imag
        verts = self._vert_array()
        inside = np.zeros(arr.shape, dtype=bool)
        m = len(verts)
        for i in range(m):
            x1, y1 = verts[i].real, verts[i].imag
            x2, y2 = verts[(i + 1) % m].real, verts[(i + 1) % m].imag
            crosses = (y1 > y) != (y2 > y)
            with np.errstate(divide="ignore", invalid="ignore"):
                xint = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            inside ^= crosses & (x < xint)
        return _scalar_out(inside, scalar)

    def area(self) -> float:
        return _shoelace(self._vert_array())

    def max_abs(self) -> float:
        return float(np.max(np.abs(self._vert_array())))

    def anchor(self) -> complex:
        return complex(np.mean(self._vert_array()))

    def scaled(self, s: float) -> "Polygon":
        return Polygon(tuple(v * s for v in self.vertices))

    def boundary(self) -> tuple[BoundaryComponent, ...]:
        verts = self.vertices
        m = len(verts)
        pieces = []
        for i in range(m):
            v0, v1 = verts[i], verts[(i + 1) % m]

            def pt(u, v0=v0, v1=v1):
                return v0 + (v1 - v0) * np.asarray(u, float)

            def dv(u, v0=v0, v1=v1):
                u = np.asarray(u, float)
                return np.full(u.shape, v1 - v0, dtype=complex)

            pieces.append(BoundaryPiece(pt, dv, closed=False, label=f"edge{i}"))
        return (BoundaryComponent(tuple(pieces), outward_sign=1, label="outer"),)

    def to_json(self) -> dict:
        return {"shape": "polygon",
                "vertices": [[v.real, v.imag] for v in self.vertices]}


def equilateral_triangle(scale: float) -> Polygon:
    """Equilateral triangle with vertices at scale * cube roots of unity."""
    w = np.exp(2j * math.pi / 3)
    return Polygon((scale * 1.0 + 0j, scale * w, scale * w**2))


@dataclass(frozen=True, repr=False)
class HalfDisk(Region):
    """Open upper half disk: |z| < radius, Im z > 0."""

    radius: float
    shape = "half_disk"

    def __post_init__(self):
        _require(_finite(self.radius), "half-disk radius must be finite")
        _require(self.radius > 0, "half-disk radius must be positive")

    def contains(self, z):
        arr, scalar = _as_complex_array(z)
        out = (arr.imag > 0) & (np.abs(arr) < self.radius)
        return _scalar_out(out, scalar)

    def area(self) -> float:
        return 0.5 * math.pi * self.radius**2

    def max_abs(self) -> float:
        return self.radius

    def anchor(self) -> complex:
        return 0.5j * self.radius

    def scaled(self, s: float) -> "HalfDisk":
        return HalfDisk(self.radius * s)

    def boundary(self) -> tuple[BoundaryComponent, ...]:
        a = self.radius

        def arc_pt(u):
            return a * np.exp(1j * math.pi * np.asarray(u, float))

        def arc_dv(u):
            return 1j * math.pi * a * np.exp(1j * math.pi * np.asarray(u, float))

        def seg_pt(u):
            return -a + 2.0 * a * np.asarray(u, float) + 0j

        def seg_dv(u):
            u = np.asarray(u, float)
            return np.full(u.shape, 2.0 * a, dtype=complex)

        arc = BoundaryPiece(arc_pt, arc_dv, closed=False, label="arc")
        seg = BoundaryPiece(seg_pt, seg_dv, closed=False, label="diameter")
        return (BoundaryComponent((arc, seg), outward_sign=1, label="outer"),)

    def to_json(self) -> dict:
        return {"shape": "half_disk", "radius": self.radius}


@dataclass(frozen=True, repr=False)
class CustomRegion(Region):
    """Caller-supplied region: membership oracle plus boundary components.

    ``node_builder`` (optional) maps (rule, level) to quadrature nodes and
    weights; without it the region cannot be integrated over.
    """

    membership: Callable[[np.ndarray], np.ndarray]
    components: tuple
    area_value: float
    max_abs_value: float
    anchor_value: complex
    hole_list: tuple = ()
    node_builder: Callable | None = None
    shape = "custom"

    def contains(self, z):
        arr, scalar = _as_complex_array(z)
        out = np.asarray(self.membership(arr), dtype=bool)
        return _scalar_out(out, scalar)

    def area(self) -> float:
        return self.area_value

    def max_abs(self) -> float:
        return self.max_abs_value

    def anchor(self) -> complex:
        return self.anchor_value

    def scaled(self, s: float):
        raise InvalidRegionError("custom regions do not support scaling")

    def boundary(self) -> tuple[BoundaryComponent, ...]:
        return tuple(self.components)

    def holes(self) -> list[tuple[complex, float]]:
        return list(self.hole_list)

    def to_json(self) -> dict:
        raise InvalidRegionError("custom regions are in-process only, not serializable")


# ---------------------------------------------------------------------------
# region JSON schema


_JSON_FIELDS = {
    "disk": {"center", "radius"},
    "annulus": {"inner", "outer"},
    "ellipse": {"semi_x", "semi_y"},
    "cardioid": {"bulge", "size"},
    "polygon": {"vertices"},
    "half_disk": {"radius"},
    "empty": set(),
}


def _json_number(value, field: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidRegionError(f"field '{field}' must be a number")
    out = float(value)
    if not math.isfinite(out):
        raise InvalidRegionError(f"field '{field}' must be finite")
    return out


def _json_point(value, field: str) -> complex:
    if (not isinstance(value, (list, tuple)) or len(value) != 2):
        raise InvalidRegionError(f"field '{field}' must be a [x, y] pair")
    return complex(_json_number(value[0], field), _json_number(value[1], field))


def region_from_json(data: dict) -> Region:
    """Build a region from its JSON description.

    The schema is ``{"shape": <tag>, ...}`` with shape-specific numeric
    fields, e.g. ``{"shape": "annulus", "inner": 0.3, "outer": 0.6}``.
    Unknown shapes or extra fields are rejected.
    """
    if not isinstance(data, dict):
        raise InvalidRegionError("region description must be a JSON object")
    shape = data.get("shape")
    if shape not in _JSON_FIELDS:
        raise InvalidRegionError(f"unknown shape tag: {shape!r}")
    extra = set(data) - _JSON_FIELDS[shape] - {"shape"}
    if extra:
        raise InvalidRegionError(f"unknown fields for {shape}: {sorted(extra)}")
    missing = _JSON_FIELDS[shape] - set(data)
    if missing:
        raise InvalidRegionError(f"missing fields for {shape}: {sorted(missing)}")
    if shape == "disk":
        return Disk(_json_point(data["center"], "center"),
                    _json_number(data["radius"], "radius"))
    if shape == "annulus":
        return Annulus(_json_number(data["inner"], "inner"),
                       _json_number(data["outer"], "outer"))
    if shape == "ellipse":
        return Ellipse(_json_number(data["semi_x"], "semi_x"),
                       _json_number(data["semi_y"], "semi_y"))
    if shape == "cardioid":
        return Cardioid(_json_number(data["bulge"], "bulge"),
                        _json_number(data["size"], "size"))
    if shape == "polygon":
        verts = data["vertices"]
        if not isinstance(verts, list):
            raise InvalidRegionError("polygon vertices must be a list of [x, y] pairs")
        return Polygon(tuple(_json_point(v, "vertices") for v in verts))
    if shape == "half_disk":
        return HalfDisk(_json_number(data["radius"], "radius"))
    return EmptyRegion()


def fits_in_unit_disk(region: Region, strict: bool = False) -> bool:
    """Whether the closure of the region lies in the closed (or open) unit disk."""
    m = region.max_abs()
    return m < 1.0 if strict else m <= 1.0 + 1e-14


# ---------------------------------------------------------------------------
# boundary parameterization over a whole component


def _piece_params(component: BoundaryComponent, t):
    t = np.asarray(t, float) % 1.0
    np_pieces = len(component.pieces)
    idx = np.minimum((t * np_pieces).astype(int), np_pieces - 1)
    u = t * np_pieces - idx
    return idx, u


def boundary_point(region: Region, component: int, t):
    """Point and parameterization speed on a boundary component.

    ``t`` in [0, 1) sweeps the whole component (wrapped mod 1),
    vectorized; returns (point, |d point / d t|), the speed one-sided at
    piece corners.
    """
    comp = region.boundary()[component]
    idx, u = _piece_params(comp, t)
    pt = np.empty(np.shape(u), dtype=complex)
    sp = np.empty(np.shape(u), dtype=float)
    np_pieces = len(comp.pieces)
    for i, piece in enumerate(comp.pieces):
        mask = idx == i
        if np.any(mask):
            pt[mask] = piece.point(u[mask])
            sp[mask] = np.abs(piece.derivative(u[mask])) * np_pieces
    if pt.ndim:
        return pt, sp
    return complex(pt[()]), float(sp[()])


def boundary_samples(region: Region, per_piece: int = 256):
    """Dense boundary samples: list of (points, unit outward normals) per component."""
    out = []
    for comp in region.boundary():
        pts, nrm = [], []
        u = (np.arange(per_piece) + 0.5) / per_piece
        for piece in comp.pieces:
            p = piece.point(u)
            d = piece.derivative(u)
            n = -1j * d / np.abs(d) * comp.outward_sign
            pts.append(p)
            nrm.append(n)
        out.append((np.concatenate(pts), np.concatenate(nrm)))
    return out


def nearest_boundary_distance(region: Region, z: complex, per_piece: int = 512) -> float:
    """Approximate distance from z to the boundary (dense sampling plus local refine)."""
    best = math.inf
    for comp in region.boundary():
        for piece in comp.pieces:
            u = np.linspace(0.0, 1.0, per_piece)
            d = np.abs(piece.point(u) - z)
            j = int(np.argmin(d))
            lo = max(0.0, u[max(j - 1, 0)])
            hi = min(1.0, u[min(j + 1, per_piece - 1)])
            # golden-section refine on the bracketing interval
            phi = (math.sqrt(5.0) - 1.0) / 2.0
            a, b = lo, hi
            for _ in range(60):
                m1 = b - phi * (b - a)
                m2 = a + phi * (b - a)
                if abs(piece.point(np.array([m1]))[0] - z) < abs(piece.point(np.array([m2]))[0] - z):
                    b = m2
                else:
                    a = m1
            best = min(best, float(abs(piece.point(np.array([0.5 * (a + b)]))[0] - z)))
    return best


# ---------------------------------------------------------------------------
# quadrature


@dataclass(frozen=True)
class QuadratureRule:
    """Tensor quadrature settings.

    ``scheme`` selects the node family on non-periodic axes: "gauss"
    (Gauss-Legendre) or "midpoint" (composite midpoint, used as an
    independent cross-check family in tests).  Periodic angular axes always
    use equispaced midpoints.  ``radial``/``angular`` are the base node
    counts per axis; ``integrate`` doubles both until two consecutive
    levels agree within ``tol`` (relative to max(1, |value|)).
    """

    scheme: str = "gauss"
    radial: int = 24
    angular: int = 64
    tol: float = 1e-11
    max_doublings: int = 5

    def __post_init__(self):
        if self.scheme not in ("gauss", "midpoint"):
            raise ValueError(f"unknown quadrature scheme: {self.scheme!r}")
        if self.radial < 2 or self.angular < 4:
            raise ValueError("quadrature base resolution too small")


def _axis_nodes(n: int, scheme: str, lo: float = 0.0, hi: float = 1.0):
    if scheme == "gauss":
        x, w = leggauss(n)
        x = 0.5 * (hi - lo) * (x + 1.0) + lo
        w = 0.5 * (hi - lo) * w
    else:
        x = lo + (hi - lo) * (np.arange(n) + 0.5) / n
        w = np.full(n, (hi - lo) / n)
    return x, w


def _angular_nodes(n: int, lo: float = 0.0, hi: float = TWO_PI):
    th = lo + (hi - lo) * (np.arange(n) + 0.5) / n
    w = np.full(n, (hi - lo) / n)
    return th, w


def quadrature_nodes(region: Region, rule: QuadratureRule, level: int = 0):
    """Shape-adapted nodes and weights at the given refinement level.

    Weights sum to the region's area (signed fan cells for polygons).
    """
    nr = rule.radial * (1 << level)
    na = rule.angular * (1 << level)

    if isinstance(region, EmptyRegion):
        return np.empty(0, complex), np.empty(0, float)

    if isinstance(region, Disk):
        s, ws = _axis_nodes(nr, rule.scheme)
        th, wt = _angular_nodes(na)
        e = np.exp(1j * th)
        z = region.center + region.radius * np.outer(s, e)
        w = region.radius**2 * np.outer(s * ws, wt)
        return z.ravel(), w.ravel()

    if isinstance(region, Annulus):
        s, ws = _axis_nodes(nr, rule.scheme, region.inner, region.outer)
        th, wt = _angular_nodes(na)
        e = np.exp(1j * th)
        z = np.outer(s, e)
        w = np.outer(s * ws, wt)
        return z.ravel(), w.ravel()

    if isinstance(region, Ellipse):
        s, ws = _axis_nodes(nr, rule.scheme)
        th, wt = _angular_nodes(na)
        z = region.semi_x * np.outer(s, np.cos(th)) + 1j * region.semi_y * np.outer(s, np.sin(th))
        w = region.semi_x * region.semi_y * np.outer(s * ws, wt)
        return z.ravel(), w.ravel()

    if isinstance(region, Cardioid):
        u, wu = _axis_nodes(nr, rule.scheme)
        th, wt = _angular_nodes(na)
        rad = region.polar_radius(th)
        z = np.outer(u, rad * np.exp(1j * th))
        w = np.outer(u * wu, rad**2 * wt)
        return z.ravel(), w.ravel()

    if isinstance(region, HalfDisk):
        s, ws = _axis_nodes(nr, rule.scheme, 0.0, region.radius)
        th, wt = _axis_nodes(na, rule.scheme, 0.0, math.pi)
        z = np.outer(s, np.exp(1j * th))
        w = np.outer(s * ws, wt)
        return z.ravel(), w.ravel()

    if isinstance(region, Polygon):
        u, wu = _axis_nodes(nr, rule.scheme)
        v, wv = _axis_nodes(na, rule.scheme)
        c0 = region.anchor()
        zs, wsyms = [], []
        for i, v0 in enumerate(region.vertices):
            v1 = region.vertices[(i + 1) % len(region.vertices)]
            e1, e2 = v0 - c0, v1 - c0
            cross = e1.real * e2.imag - e1.imag * e2.real  # signed doubled area
            # Duffy map: (u, v) -> c0 + u*((1-v)*e1 + v*e2), jacobian u*cross
            z = c0 + np.outer(u, (1.0 - v) * e1 + v * e2)
            w = cross * np.outer(u * wu, wv)
            zs.append(z.ravel())
            wsyms.append(w.ravel())
        return np.concatenate(zs), np.concatenate(wsyms)

    if isinstance(region, CustomRegion):
        if region.node_builder is None:
            raise InvalidRegionError("custom region has no quadrature node builder")
        return region.node_builder(rule, level)

    raise InvalidRegionError(f"no quadrature map for region type {type(region).__name__}")


def integrate(region: Region, f: Callable[[np.ndarray], np.ndarray],
              rule: QuadratureRule | None = None):
    """Integrate f over the region with doubling refinement.

    Returns ``(value, error_estimate)`` where the estimate is the change in
    the last doubling.  Raises :class:`ConvergenceError` if the tolerance
    is not met within the rule's doubling budget.
    """
    rule = rule or QuadratureRule()
    if isinstance(region, EmptyRegion):
        return 0.0, 0.0
    prev = None
    for level in range(rule.max_doublings + 1):
        z, w = quadrature_nodes(region, rule, level)
        val = complex(np.sum(w * f(z)))
        if prev is not None:
            err = abs(val - prev)
            if err <= rule.tol * max(1.0, abs(val)):
                return (val.real if val.imag == 0.0 else val), err
        prev = val
    raise ConvergenceError(
        f"quadrature did not converge to tol={rule.tol:g} within "
        f"{rule.max_doublings} doublings (last value {prev})")


def area_moment(region: Region, n: int, rule: QuadratureRule | None = None) -> complex:
    """(1/pi) * integral of w^n over the region."""
    if n < 0:
        raise ValueError("moment order must be nonnegative")
    if isinstance(region, EmptyRegion):
        return 0j
    val, _ = integrate(region, lambda z: z**n, rule)
    return complex(val) / math.pi


def radial_decomposition(region: Region):
    """Radial bands [(inner, outer), ...] for rotation-invariant regions, else None."""
    return region.radial_bands()


def exterior_ball_radius(region: Region, per_piece: int = 360, cap: float = 4.0) -> float:
    """Numerical inf over boundary points of the largest tangent exterior ball.

    For each sampled boundary point z with outward unit normal nu, the
    largest eps <= cap is found (by bisection) such that the ball centered
    at z + eps*nu of radius eps avoids the region.  Convex shapes report
    the cap.
    """
    samples = boundary_samples(region, per_piece)
    pts = np.concatenate([p for p, _ in samples])
    best = cap
    for p, n in samples:
        for z, nu in zip(p, n):
            lo, hi = 0.0, cap
            for _ in range(40):
                mid = 0.5 * (lo + hi)
                center = z + mid * nu
                ok = (not bool(region.contains(center))
                      and float(np.min(np.abs(pts - center))) >= mid * (1.0 - 1e-9))
                if ok:
                    lo = mid
                else:
                    hi = mid
            best = min(best, lo)
    return best

"""Boundary measures with truncated trigonometric densities.

A :class:`BoundaryMeasure` attaches a real density to every smooth piece of
a region's boundary.  The density of piece p is expressed w.r.t. the piece
parameter u in [0, 1]:

    dnu = rho_p(u) du,    rho_p(u) = sum_j coeff[j] * phi_j(u),

so masses and moments carry no arc-length speed factor.  Closed smooth
loops (circles, ellipse, limacon) use the periodic Fourier family

    phi_0 = 1, phi_{2k-1} = cos(2 pi k u), phi_{2k} = sin(2 pi k u),

while open pieces (polygon edges, half-disk arc and diameter) use the
half-range sine family sin(pi k u), k = 1..2N+1.  Swept densities vanish
at convex corners (the harmonic-measure exponent pi/angle - 1 is positive
there), so the sine family matches the endpoint behaviour exactly and,
unlike a combined cos+sin family, is not overcomplete on [0, 1]; an
overcomplete family would leave the least-squares solve free to trade
wild cancelling blocks between adjacent pieces.  Circle pieces expose a
per-angle view
(rho_theta = rho_u / 2 pi) since angular densities are the conventional
normalization for circles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss

from ginhole.geometry import BoundaryPiece, Region

TWO_PI = 2.0 * math.pi


def basis_matrix(u: np.ndarray, n_modes: int, periodic: bool) -> np.ndarray:
    """Evaluate the trig basis at parameters u.

    Periodic pieces get columns [1, cos(2 pi u), sin(2 pi u), ...,
    cos(2 pi N u), sin(2 pi N u)]; open pieces get the half-range sines
    [sin(pi u), sin(2 pi u), ..., sin((2N+1) pi u)].  Both families have
    2N+1 members.
    """
    u = np.asarray(u, float)
    if periodic:
        cols = [np.ones_like(u)]
        for k in range(1, n_modes + 1):
            cols.append(np.cos(TWO_PI * k * u))
            cols.append(np.sin(TWO_PI * k * u))
    else:
        cols = [np.sin(math.pi * k * u) for k in range(1, 2 * n_modes + 2)]
    return np.stack(cols, axis=-1)


def piece_nodes(piece: BoundaryPiece, npts: int):
    """1D quadrature nodes/weights on a piece parameter: exact-for-trig
    equispaced midpoints on closed loops, Gauss-Legendre on open pieces."""
    if piece.closed:
        u = (np.arange(npts) + 0.5) / npts
        w = np.full(npts, 1.0 / npts)
    else:
        x, w = leggauss(npts)
        u = 0.5 * (x + 1.0)
        w = 0.5 * w
    return u, w


@dataclass(frozen=True)
class BoundaryMeasure:
    """A measure on the region's boundary with per-piece trig densities.

    ``coefficients[c][p]`` is the coefficient vector (length 2N+1) of piece
    p of boundary component c.  Coefficient layout matches
    :func:`basis_matrix`.
    """

    region: Region
    coefficients: tuple

    def __post_init__(self):
        comps = self.region.boundary()
        if len(self.coefficients) != len(comps):
            raise ValueError("one coefficient block per boundary component required")
        coeffs = tuple(
            tuple(np.asarray(c, dtype=float) for c in block)
            for block in self.coefficients
        )
        for block, comp in zip(coeffs, comps):
            if len(block) != len(comp.pieces):
                raise ValueError("one coefficient vector per boundary piece required")
            for c in block:
                if c.ndim != 1 or len(c) % 2 == 0:
                    raise ValueError("coefficient vectors must have odd length 2N+1")
        object.__setattr__(self, "coefficients", coeffs)

    # -- evaluation ---------------------------------------------------------
    def n_modes(self, component: int, piece: int) -> int:
        return (len(self.coefficients[component][piece]) - 1) // 2

    def piece_density(self, component: int, piece: int, u) -> np.ndarray:
        """Density w.r.t. the piece parameter u in [0, 1]."""
        comp = self.region.boundary()[component]
        per = comp.pieces[piece].closed
        c = self.coefficients[component][piece]
        return basis_matrix(u, (len(c) - 1) // 2, per) @ c

    def density_along(self, component: int, t) -> np.ndarray:
        """Density w.r.t. the component parameter t in [0, 1).

        Piece p covers t in [p/P, (p+1)/P), so the per-t density is P times
        the per-u density of the active piece.
        """
        comp = self.region.boundary()[component]
        P = len(comp.pieces)
        t = np.asarray(t, float) % 1.0
        idx = np.minimum((t * P).astype(int), P - 1)
        u = t * P - idx
        out = np.empty(np.shape(u), dtype=float)
        for p in range(P):
            mask = idx == p
            if np.any(mask):
                out[mask] = P * self.piece_density(component, p, u[mask])
        return out

    def angular_density(self, component: int, piece: int, theta) -> np.ndarray:
        """Per-angle view rho_theta = rho_u / (2 pi) for full-circle pieces."""
        return self.piece_density(component, piece, np.asarray(theta, float) / TWO_PI) / TWO_PI

    # -- integrals ----------------------------------------------------------
    def _piece_iter(self):
        for ci, comp in enumerate(self.region.boundary()):
            for pi, piece in enumerate(comp.pieces):
                yield ci, pi, piece, self.coefficients[ci][pi]

    def _npts(self, extra_degree: int = 0) -> int:
        worst = max((len(c) - 1) // 2 for block in self.coefficients for c in block)
        return max(256, 4 * (worst + extra_degree + 8))

    def mass(self, component: int | None = None) -> float:
        """Total mass, or the mass of one boundary component."""
        total = 0.0
        for ci, pi, piece, c in self._piece_iter():
            if component is not None and ci != component:
                continue
            u, w = piece_nodes(piece, self._npts())
            total += float(w @ self.piece_density(ci, pi, u))
        return total

    def moment(self, n: int) -> complex:
        """integral of w^n dnu over the whole boundary measure."""
        total = 0j
        for ci, pi, piece, c in self._piece_iter():
            u, w = piece_nodes(piece, self._npts(n))
            total += complex(np.sum(w * piece.point(u) ** n * self.piece_density(ci, pi, u)))
        return total

    def second_abs_moment(self) -> float:
        """integral of |w|^2 dnu."""
        total = 0.0
        for ci, pi, piece, c in self._piece_iter():
            u, w = piece_nodes(piece, self._npts(2))
            total += float(np.sum(w * np.abs(piece.point(u)) ** 2 * self.piece_density(ci, pi, u)))
        return total

    def integral(self, f) -> float:
        """integral of f(w) dnu for a vectorized integrand f."""
        total = 0.0
        for ci, pi, piece, c in self._piece_iter():
            u, w = piece_nodes(piece, self._npts(8))
            total += float(np.sum(w * f(piece.point(u)) * self.piece_density(ci, pi, u)))
        return total

    def min_density(self, samples_per_piece: int = 2048) -> float:
        """Minimum sampled density value (negativity diagnostic)."""
        worst = math.inf
        for ci, pi, piece, c in self._piece_iter():
            u = np.linspace(0.0, 1.0, samples_per_piece)
            worst = min(worst, float(np.min(self.piece_density(ci, pi, u))))
        return worst

    def scaled_mass(self, factor: float) -> "BoundaryMeasure":
        """Same shape, all densities multiplied by a constant."""
        return BoundaryMeasure(
            self.region,
            tuple(tuple(c * factor for c in block) for block in self.coefficients),
        )


def constant_measure(region: Region, component_masses) -> BoundaryMeasure:
    """Boundary measure with constant per-piece densities.

    ``component_masses`` lists one total mass per boundary component; the
    mass of a component is split equally among its pieces (per unit of the
    piece parameter, so multi-piece components get piecewise-constant
    densities of equal u-rate).
    """
    comps = region.boundary()
    if len(component_masses) != len(comps):
        raise ValueError("one mass per boundary component required")
    blocks = []
    for comp, m in zip(comps, component_masses):
        if not all(p.closed for p in comp.pieces):
            raise ValueError("constant densities need periodic pieces; the "
                             "open-piece sine family has no constant mode")
        P = len(comp.pieces)
        blocks.append(tuple(np.array([m / P]) for _ in range(P)))
    return BoundaryMeasure(region, tuple(blocks))

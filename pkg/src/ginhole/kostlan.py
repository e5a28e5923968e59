"""Exact hole probabilities for radial holes and their large-radius slopes.

For the infinite Ginibre point process, the set of squared moduli of the
points has the same law as independent draws R_k^2 ~ Gamma(k, 1),
k = 1, 2, ...  A radial hole (a union of centered annular bands) is
therefore avoided with probability

    P = prod_k P[R_k^2 outside every scaled band],

an infinite product of regularized incomplete-gamma terms.  This module
evaluates truncated logs of such products with certified truncation
bounds, extrapolates the r -> infinity slope of (1/r^4) log P, and
provides the standard Chernoff bounds used to control the factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammainc, gammaincc, gammaln, logsumexp

from ginhole.catalog import kostlan_slope_closed

_UNDERFLOW = 1e-280
_PROXY_RATE = 0.25  # factor-tail proxy exp(-k/4) used for the truncation index


def reg_gamma(k: int, x: float):
    """Regularized incomplete gamma pair (P(k, x), Q(k, x)).

    P(k, x) = gamma(k, x) / (k-1)!  is the CDF of a Gamma(k, 1) variable;
    Q = 1 - P computed independently (complement accurate to 1e-14).
    Evaluation switches between the series (x < k + 1) and the continued
    fraction, per the standard regime split.
    """
    if k < 1 or k != int(k):
        raise ValueError("k must be a positive integer")
    if x < 0:
        raise ValueError("x must be nonnegative")
    return float(gammainc(k, x)), float(gammaincc(k, x))


def _log_gamma_tail(k: int, x: float) -> float:
    """log P[Poisson(x) >= k] = log P(k, x), stable for tiny tails."""
    if x == 0.0:
        return -math.inf
    width = int(12.0 * math.sqrt(x) + 60)
    j = np.arange(k, k + width)
    logs = -x + j * np.log(x) - gammaln(j + 1)
    # geometric remainder: term ratio <= x / (k + width)
    ratio = x / (k + width)
    rem = logs[-1] + math.log(ratio / (1.0 - ratio)) if ratio < 1 else math.inf
    return float(logsumexp(np.append(logs, rem)))


def _log_gamma_head(k: int, x: float) -> float:
    """log P[Poisson(x) <= k-1] = log Q(k, x), stable for tiny heads."""
    if x == 0.0:
        return 0.0
    j = np.arange(k)
    return float(logsumexp(-x + j * np.log(x) - gammaln(j + 1)))


@dataclass(frozen=True)
class RadialHoleSpec:
    """A union of centered annular bands scaled by a common radius.

    ``bands`` lists (inner, outer) fractions with
    0 <= inner < outer <= 1, sorted and disjoint; the hole is
    scale * {band radii}.  A (0, 1) band is a full disk hole.
    """

    bands: tuple
    scale: float
    truncation_tolerance: float = 1e-12

    def __post_init__(self):
        bands = tuple((float(a), float(b)) for a, b in self.bands)
        object.__setattr__(self, "bands", bands)
        for a, b in bands:
            if not 0.0 <= a < b:
                raise ValueError("each band needs 0 <= inner < outer")
            if b > 1.0:
                raise ValueError("band outer fraction exceeds 1; fold the "
                                 "excess into the scale instead")
        for (a0, b0), (a1, b1) in zip(bands, bands[1:]):
            if b0 > a1:
                raise ValueError("bands must be disjoint and sorted")
        if self.scale < 0:
            raise ValueError("scale must be nonnegative")
        if not 0 < self.truncation_tolerance < 1:
            raise ValueError("truncation tolerance must lie in (0, 1)")


@dataclass(frozen=True)
class RadialHoleResult:
    """log of a radial hole probability with its truncation certificate."""

    log_p: float
    truncation_index: int
    tail_bound: float

    def __float__(self) -> float:
        return self.log_p


def _truncation_index(scale: float, tol: float) -> int:
    """Smallest K with sum_{k>K} -log(1 - e^(-k/4)) < tol, floored at 2 r^2."""
    floor = int(math.ceil(2.0 * scale * scale))
    # tail(K) <= e^{-(K+1)/4} / (1 - e^{-1/4}) / (1 - e^{-(K+1)/4});
    # scan upward from the analytic estimate minus a safety margin
    k = max(1, int(-4.0 * math.log(tol * -math.expm1(-_PROXY_RATE))) - 8)

    def tail(kk: int) -> float:
        t = 0.0
        q = math.exp(-_PROXY_RATE * (kk + 1))
        while q > 1e-300:
            t -= math.log1p(-q)
            q *= math.exp(-_PROXY_RATE)
        return t

    while tail(k) >= tol:
        k += 1
    return max(k, floor)


def avoidance_factors(ks: np.ndarray, edges_sq: list) -> np.ndarray:
    """P[Gamma(k,1) outside every (lo, hi)] for each k, vectorized.

    ``edges_sq`` lists disjoint sorted (lo, hi) intervals.  Assembled as
    a sum of positive gap probabilities (below the first band, between
    consecutive bands, above the last band), never as 1 minus something,
    so small factors keep relative accuracy; each inter-band gap uses
    whichever of the P- or Q-differences is taken between the larger
    pair of values.
    """
    lo0 = edges_sq[0][0]
    out = gammainc(ks, lo0) if lo0 > 0 else np.zeros(len(ks))
    out = out + gammaincc(ks, edges_sq[-1][1])
    for (_, hi_sq), (lo_sq, _) in zip(edges_sq, edges_sq[1:]):
        p_lo = gammainc(ks, lo_sq)
        gap_p = gammainc(ks, lo_sq) - gammainc(ks, hi_sq)
        gap_q = gammaincc(ks, hi_sq) - gammaincc(ks, lo_sq)
        out = out + np.where(p_lo <= 0.5, gap_p, gap_q)
    return out


def _log_factor_exact(k: int, edges_sq: list) -> float:
    """log avoid-probability for one k via Poisson log-space sums."""
    logs = []
    lo0 = edges_sq[0][0]
    if lo0 > 0:
        logs.append(_log_gamma_tail(k, lo0))
    logs.append(_log_gamma_head(k, edges_sq[-1][1]))
    for (_, hi_sq), (lo_sq, _) in zip(edges_sq, edges_sq[1:]):
        a = _log_gamma_tail(k, lo_sq)
        b = _log_gamma_tail(k, hi_sq)
        if a > -math.inf:
            logs.append(a + math.log1p(-math.exp(min(0.0, b - a))))
    return float(logsumexp(np.asarray(logs)))


def _tail_bound(k_from: int, x_hi: float) -> float:
    """Rigorous bound on sum_{k >= k_from} -log(factor_k).

    Uses 1 - factor_k <= P(k, x_hi) <= exp(-x_hi + k - k log(k / x_hi)),
    valid for k > x_hi; caller guarantees k_from >= 2 x_hi.
    """
    if x_hi == 0.0:
        return 0.0
    total = 0.0
    k = k_from
    while True:
        log_u = -x_hi + k - k * math.log(k / x_hi)
        u = math.exp(log_u)
        if u < 1e-310 or k > k_from + 200000:
            total += u  # geometric remainder, ratio <= 1/2
            break
        total -= math.log1p(-min(u, 0.5))
        k += 1
    return total


def log_hole_radial(spec: RadialHoleSpec) -> RadialHoleResult:
    """log P[no point of the infinite process in scale * bands].

    Evaluates sum_{k <= K} log P[R_k^2 outside every scaled band] with
    K at least 2 scale^2 and large enough that the omitted product tail
    is within the truncation tolerance of 1; the result carries K and a
    certified bound on the omitted -log tail.
    """
    if spec.scale == 0.0 or not spec.bands:
        return RadialHoleResult(log_p=0.0, truncation_index=0, tail_bound=0.0)
    r2 = spec.scale * spec.scale
    edges_sq = [(a * a * r2, b * b * r2) for a, b in spec.bands]
    kmax = _truncation_index(spec.scale, spec.truncation_tolerance)
    ks = np.arange(1, kmax + 1)
    factors = avoidance_factors(ks, edges_sq)
    logs = np.empty(kmax)
    ok = factors >= _UNDERFLOW
    logs[ok] = np.log(factors[ok])
    for idx in np.nonzero(~ok)[0]:
        logs[idx] = _log_factor_exact(int(ks[idx]), edges_sq)
    bound = _tail_bound(kmax + 1, edges_sq[-1][1])
    return RadialHoleResult(log_p=math.fsum(logs), truncation_index=kmax,
                            tail_bound=bound)


@dataclass(frozen=True)
class SlopeReport:
    """Per-radius normalized log-probabilities and the fitted slope."""

    values: tuple           # ((r, log P / r^4), ...)
    extrapolated_slope: float
    closed_slope: float
    relative_gap: float


def band_slope_study(bands, r_list, truncation_tolerance: float = 1e-12):
    """Fit the large-r slope of (1/r^4) log P[hole r * bands].

    Fits s + alpha log(r)/r^2 + beta/r^2 by weighted least squares with
    weights r^4 (equalizing the absolute log P noise across radii);
    -s equals the hole rate excess of the union of bands.  Returns
    (((r, log P / r^4), ...), s).  Needs at least three increasing
    radii, each >= 4.
    """
    radii = [float(r) for r in r_list]
    if len(radii) < 3:
        raise ValueError("need at least three radii")
    if any(r < 4.0 for r in radii):
        raise ValueError("each radius must be at least 4")
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError("radii must be increasing")

    values = []
    for r in radii:
        res = log_hole_radial(RadialHoleSpec(bands=tuple(bands), scale=r,
                                             truncation_tolerance=truncation_tolerance))
        if res.log_p > 0.0:
            raise ArithmeticError("hole log-probability came out positive")
        values.append((r, res.log_p / r ** 4))

    rr = np.asarray(radii)
    vv = np.asarray([v for _, v in values])
    design = np.stack([np.ones_like(rr), np.log(rr) / rr ** 2, 1.0 / rr ** 2], axis=1)
    w = rr ** 2  # sqrt of the r^4 weights
    coef, *_ = np.linalg.lstsq(design * w[:, None], vv * w, rcond=None)
    return tuple(values), float(coef[0])


def slope_study(c: float, r_list, truncation_tolerance: float = 1e-12) -> SlopeReport:
    """Slope of (1/r^4) log P[hole r*{c < |z| < 1}] vs the closed form.

    Requires 0 <= c < 1; see band_slope_study for the fit and the radii
    preconditions.
    """
    if not 0.0 <= c < 1.0:
        raise ValueError("need 0 <= c < 1")
    values, slope = band_slope_study(((c, 1.0),), r_list, truncation_tolerance)
    closed = kostlan_slope_closed(c)
    return SlopeReport(values=values, extrapolated_slope=slope,
                       closed_slope=closed,
                       relative_gap=abs(slope - closed) / abs(closed))


def chernoff_bounds(k: int, r: float, c: float):
    """Upper bounds on P[R_k^2 < c^2 r^2] and on P[R_k^2 > r^2].

    The first bound exp(-k log(k/(c^2 r^2)) + k - c^2 r^2) needs
    k >= c^2 r^2; the second exp(-r^2 + k - k log(k/r^2)) needs
    k <= r^2; each is refused outside its regime (both equal 1 at their
    regime edge).
    """
    if k < 1 or k != int(k):
        raise ValueError("k must be a positive integer")
    if r < 0 or not 0 <= c <= 1:
        raise ValueError("need r >= 0 and 0 <= c <= 1")
    x_lo = c * c * r * r
    x_hi = r * r
    if k < x_lo:
        raise ValueError("lower-band bound needs k >= c^2 r^2")
    if k > x_hi:
        raise ValueError("upper-tail bound needs k <= r^2")
    if x_lo == 0.0:
        below = 0.0
    else:
        below = math.exp(-k * math.log(k / x_lo) + k - x_lo)
    above = math.exp(-x_hi + k - k * math.log(k / x_hi))
    return below, above

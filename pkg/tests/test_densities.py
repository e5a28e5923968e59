"""Boundary measures: densities, masses, moments against closed forms."""

import math

import numpy as np
import pytest

from ginhole.catalog import annulus_lambda, balayage_closed
from ginhole.densities import BoundaryMeasure, constant_measure
from ginhole.geometry import Annulus, Cardioid, Disk, Ellipse


def test_disk_measure_mass():
    nu = balayage_closed(Disk(0.2 + 0.1j, 0.3))
    # swept measure carries area/pi of the hole
    assert nu.mass() == pytest.approx(0.09, rel=1e-14)
    assert nu.mass(0) == pytest.approx(0.09, rel=1e-14)


def test_disk_density_constant():
    nu = balayage_closed(Disk(0j, 0.5))
    t = np.linspace(0.0, 1.0, 7, endpoint=False)
    rho = nu.density_along(0, t)
    assert np.allclose(rho, 0.25)  # radius^2, uniform in t


def test_annulus_split_masses():
    a, b = 0.3, 0.6
    nu = balayage_closed(Annulus(a, b))
    lam = annulus_lambda(a, b)
    total = b * b - a * a
    assert nu.mass() == pytest.approx(total, rel=1e-14)
    # component 0 is the outer circle, 1 the inner
    assert nu.mass(1) == pytest.approx(lam * total, rel=1e-12)
    assert nu.mass(0) == pytest.approx((1 - lam) * total, rel=1e-12)


def test_ellipse_density_profile():
    a, b = 0.6, 0.4
    nu = balayage_closed(Ellipse(a, b))
    chi = (a * a - b * b) / (a * a + b * b)
    t = np.linspace(0.0, 1.0, 16, endpoint=False)
    want = a * b * (1.0 - chi * np.cos(4 * math.pi * t))
    assert np.allclose(nu.density_along(0, t), want, atol=1e-14)
    assert nu.mass() == pytest.approx(a * b, rel=1e-12)
    assert nu.min_density() > 0.0


def test_cardioid_mass():
    a, b = 0.2, 0.3
    nu = balayage_closed(Cardioid(a, b))
    # area/pi of the oval is b^2 (1 + 2 a^2)
    assert nu.mass() == pytest.approx(b * b * (1 + 2 * a * a), rel=1e-12)


def test_second_abs_moment_disk():
    # int |z|^2 dnu on the circle of radius r with mass r^2 is r^4
    r = 0.5
    nu = balayage_closed(Disk(0j, r))
    assert nu.second_abs_moment() == pytest.approx(r**4, rel=1e-12)


def test_moment_translated_disk():
    # first moment of the swept measure equals that of the area measure
    c = 0.2 + 0.1j
    nu = balayage_closed(Disk(c, 0.3))
    assert nu.moment(1) == pytest.approx(c * 0.09, abs=1e-13)
    assert nu.moment(0) == pytest.approx(0.09, abs=1e-13)


def test_integral_matches_mass():
    nu = balayage_closed(Annulus(0.3, 0.6))
    assert nu.integral(lambda z: np.ones_like(z, dtype=float)) == \
        pytest.approx(nu.mass(), rel=1e-12)


def test_scaled_mass():
    nu = balayage_closed(Disk(0j, 0.5))
    doubled = nu.scaled_mass(2.0)
    assert doubled.mass() == pytest.approx(2 * nu.mass(), rel=1e-14)
    assert isinstance(doubled, BoundaryMeasure)


def test_constant_measure():
    nu = constant_measure(Annulus(0.3, 0.6), [0.2, 0.1])
    assert nu.mass(0) == pytest.approx(0.2, rel=1e-14)
    assert nu.mass(1) == pytest.approx(0.1, rel=1e-14)
    t = np.linspace(0.0, 1.0, 5, endpoint=False)
    assert np.allclose(nu.density_along(0, t), 0.2)


def test_angular_density_circle():
    # per-theta density of a circle piece is per-t density / (2 pi)
    nu = balayage_closed(Disk(0j, 0.5))
    theta = np.array([0.0, 1.0, 2.0])
    assert np.allclose(nu.angular_density(0, 0, theta),
                       0.25 / (2 * math.pi))

"""Closed-form catalog: rate excesses, annulus split, slope formula."""

import math

import numpy as np
import pytest

from ginhole.catalog import (EMPTY_SET_RATE, NotInCatalogError, annulus_lambda,
                             catalog_entries, hole_rate, in_catalog,
                             kostlan_slope_closed, r_prime_closed)
from ginhole.geometry import (Annulus, Cardioid, Disk, Ellipse, EmptyRegion,
                              HalfDisk, equilateral_triangle)


def test_empty_set_rate():
    assert EMPTY_SET_RATE == 0.75
    assert hole_rate(EmptyRegion()) == 0.75


def test_disk_rate_excess():
    assert r_prime_closed(Disk(0j, 0.5)) == pytest.approx(0.5**4 / 4,
                                                          rel=1e-15)
    # center independence
    assert r_prime_closed(Disk(0.2 + 0.1j, 0.3)) == \
        pytest.approx(0.3**4 / 4, rel=1e-15)


def test_annulus_rate_excess():
    got = r_prime_closed(Annulus(0.3, 0.6))
    assert got == pytest.approx(0.004081882879798639, rel=1e-15)


def test_annulus_degenerates_to_zero():
    # shrinking the gap removes the hole's excess
    vals = [r_prime_closed(Annulus(0.5, 0.5 + h)) for h in (1e-2, 1e-3, 1e-4)]
    assert vals[0] > vals[1] > vals[2] > 0
    assert vals[2] < 1e-12


def test_ellipse_rate_excess():
    got = r_prime_closed(Ellipse(0.6, 0.4))
    assert got == pytest.approx(0.01329230769230769, rel=1e-15)
    # degenerate to a disk: matches the disk formula
    assert r_prime_closed(Ellipse(0.5, 0.5)) == \
        pytest.approx(0.5**4 / 4, rel=1e-12)


def test_cardioid_rate_excess():
    a, b = 0.2, 0.3
    got = r_prime_closed(Cardioid(a, b))
    want = (b**4 / 2) * (1 + a * a) ** 2 - b**4 / 4
    assert got == pytest.approx(want, rel=1e-15)
    # vanishing bulge degenerates to the disk of radius b
    assert r_prime_closed(Cardioid(1e-9, b)) == pytest.approx(b**4 / 4,
                                                              rel=1e-7)


def test_triangle_rate_excess():
    got = r_prime_closed(equilateral_triangle(0.5))
    want = 0.5**4 * 9 * math.sqrt(3) / (160 * math.pi)
    assert got == pytest.approx(want, rel=1e-15)
    assert got == pytest.approx(0.0019382656479672376, rel=1e-14)


def test_half_disk_rate_excess():
    got = r_prime_closed(HalfDisk(0.8))
    want = (0.8**4 / 2) * (0.5 - 4 / math.pi**2)
    assert got == pytest.approx(want, rel=1e-15)
    assert got == pytest.approx(0.019397686360196897, rel=1e-14)


def test_annulus_lambda_value():
    assert annulus_lambda(0.3, 0.6) == pytest.approx(0.38801418711114843,
                                                     rel=1e-14)


def test_annulus_lambda_range():
    rng = np.random.default_rng(11)
    for _ in range(50):
        a = rng.uniform(0.05, 0.8)
        b = rng.uniform(a + 0.05, 0.95)
        lam = annulus_lambda(a, b)
        # inner circle always carries less than half, more than none
        assert 0.0 < lam < 0.5


def test_kostlan_slope_closed():
    assert kostlan_slope_closed(0.0) == pytest.approx(-0.25, rel=1e-15)
    assert kostlan_slope_closed(0.5) == pytest.approx(-0.0314960098749895,
                                                      rel=1e-13)
    # slope is minus the rate excess of the unit-outer annulus
    c = 0.4
    assert kostlan_slope_closed(c) == \
        pytest.approx(-r_prime_closed(Annulus(c, 1.0)), rel=1e-13)


def test_scaling_law_closed_forms():
    # fourth-power dilation scaling of the excess, exact in closed form
    for s in (0.5, 0.8):
        assert r_prime_closed(Ellipse(s * 0.6, s * 0.4)) == \
            pytest.approx(s**4 * r_prime_closed(Ellipse(0.6, 0.4)), rel=1e-12)
        assert r_prime_closed(Disk(0j, s * 0.5)) == \
            pytest.approx(s**4 * r_prime_closed(Disk(0j, 0.5)), rel=1e-12)


def test_in_catalog():
    assert in_catalog(Disk(0j, 0.5))
    assert in_catalog(EmptyRegion())
    assert in_catalog(equilateral_triangle(0.5))
    from ginhole.geometry import Polygon
    square = Polygon((0.4 + 0.4j, -0.4 + 0.4j, -0.4 - 0.4j, 0.4 - 0.4j))
    assert not in_catalog(square)
    with pytest.raises(NotInCatalogError):
        r_prime_closed(square)


def test_catalog_entries_consistent():
    entries = catalog_entries()
    assert len(entries) == 7
    names = [e.name for e in entries]
    assert len(set(names)) == 7
    for e in entries:
        assert e.r_prime_closed == pytest.approx(r_prime_closed(e.region),
                                                 rel=1e-15)
        assert e.rate_excess_formula

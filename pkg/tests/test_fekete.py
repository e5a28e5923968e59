"""Fekete optimizer: objective, gradient, projection, optimization."""

import math

import numpy as np
import pytest

from ginhole.fekete import (FeketeReport, ascent_direction, configuration,
                            exchange_gains, min_separation, optimize,
                            project_feasible, rate_study,
                            weighted_log_product)
from ginhole.geometry import (Annulus, Disk, Ellipse, EmptyRegion,
                              equilateral_triangle)


def test_weighted_log_product_two_points():
    z = np.array([0.5, -0.5], dtype=complex)
    want = math.log(1.0) - 0.5 * (0.25 + 0.25)
    assert weighted_log_product(z) == pytest.approx(want, rel=1e-14)


def test_weighted_log_product_coincident():
    z = np.array([0.3 + 0.1j, 0.3 + 0.1j])
    assert weighted_log_product(z) == -math.inf


def test_two_point_optimum():
    # antipodal pair at radius 1/sqrt(2); value log sqrt(2) - 1/2
    # the value converges quadratically faster than the geometry, so it
    # gets the tight tolerance
    rep = optimize(EmptyRegion(), 2, seed=0, restarts=4)
    z = rep.configuration.points
    assert abs(z[0] + z[1]) < 1e-5
    assert abs(z[0]) == pytest.approx(1 / math.sqrt(2), abs=1e-4)
    assert rep.configuration.value == pytest.approx(
        0.5 * math.log(2.0) - 0.5, abs=1e-9)


def test_gradient_matches_finite_differences():
    rng = np.random.default_rng(4)
    z = (rng.uniform(-0.5, 0.5, 8) + 1j * rng.uniform(-0.5, 0.5, 8))
    g = ascent_direction(z)
    h = 1e-7
    for i in range(len(z)):
        for dz, comp in ((h, "real"), (1j * h, "imag")):
            up = z.copy()
            up[i] += dz
            down = z.copy()
            down[i] -= dz
            fd = (weighted_log_product(up) - weighted_log_product(down)) / (2 * h)
            got = g[i].real if comp == "real" else g[i].imag
            assert got == pytest.approx(fd, rel=1e-6, abs=1e-6)


def test_project_feasible_radial_clamp():
    z = project_feasible(2.0 + 0j, EmptyRegion())
    assert z == pytest.approx(1.0 + 0j, abs=1e-15)
    # already feasible points pass through
    assert project_feasible(0.3 + 0.2j, EmptyRegion()) == 0.3 + 0.2j


def test_project_feasible_out_of_hole():
    region = Disk(0j, 0.5)
    z = project_feasible(0.2 + 0j, region)
    assert not region.contains(z)
    assert abs(z) == pytest.approx(0.5, abs=1e-12)
    # center of the disk resolves deterministically
    zc = project_feasible(0j, region)
    assert not region.contains(zc)
    assert abs(zc - 0.5) < 1e-12


def test_project_feasible_annulus():
    region = Annulus(0.3, 0.6)
    inner = project_feasible(0.35, region)
    outer = project_feasible(0.55, region)
    assert not region.contains(inner)
    assert not region.contains(outer)
    assert abs(inner) <= 0.3 + 1e-12
    assert abs(outer) >= 0.6 - 1e-12


def test_project_feasible_nonradial():
    for region in (Ellipse(0.6, 0.4), equilateral_triangle(0.5)):
        for z0 in (0.1 + 0.05j, -0.2j, 0.05 + 0j):
            z = project_feasible(z0, region)
            assert not region.contains(z)
            assert abs(z) <= 1.0 + 1e-12


def test_exchange_gains_shape_and_sign():
    rng = np.random.default_rng(9)
    z = rng.uniform(-0.6, 0.6, 12) + 1j * rng.uniform(-0.6, 0.6, 12)
    cand = rng.uniform(-0.6, 0.6, 30) + 1j * rng.uniform(-0.6, 0.6, 30)
    gains = exchange_gains(z, cand)
    assert gains.shape == (30, 12)
    base = weighted_log_product(z)
    # spot check one entry against a literal swap
    trial = z.copy()
    trial[5] = cand[7]
    assert gains[7, 5] == pytest.approx(weighted_log_product(trial) - base,
                                        abs=1e-10)


def test_optimized_config_near_exchange_optimal():
    rep = optimize(Disk(0j, 0.5), 40, seed=1, restarts=2)
    z = rep.configuration.points
    rng = np.random.default_rng(2)
    cand = rng.uniform(-1, 1, 400) + 1j * rng.uniform(-1, 1, 400)
    cand = cand[np.abs(cand) <= 1.0]
    cand = cand[~Disk(0j, 0.5).contains(cand)]
    gains = exchange_gains(z, cand)
    assert float(np.max(gains)) < 1e-6


def test_optimize_report_fields():
    rep = optimize(Disk(0j, 0.5), 30, seed=0, restarts=3)
    assert isinstance(rep, FeketeReport)
    assert rep.configuration.feasible
    assert rep.configuration.n == 30
    assert rep.restarts_used == 3
    assert len(rep.restart_values) == 3
    assert rep.r_estimate == pytest.approx(
        -2 * rep.configuration.value / (30 * 29), rel=1e-12)
    assert rep.delta_n == pytest.approx(math.exp(-rep.r_estimate), rel=1e-12)
    assert rep.min_separation == pytest.approx(
        min_separation(rep.configuration), rel=1e-15)
    # best-of-restarts is the max
    assert rep.configuration.value == pytest.approx(max(rep.restart_values),
                                                    rel=1e-15)


def test_optimize_deterministic_and_threaded():
    a = optimize(Annulus(0.3, 0.6), 25, seed=5, restarts=4, threads=1)
    b = optimize(Annulus(0.3, 0.6), 25, seed=5, restarts=4, threads=4)
    assert np.array_equal(a.configuration.points, b.configuration.points)
    assert a.restart_values == b.restart_values


def test_optimize_seed_sensitivity():
    a = optimize(Disk(0j, 0.5), 20, seed=1, restarts=2)
    b = optimize(Disk(0j, 0.5), 20, seed=2, restarts=2)
    assert not np.array_equal(a.configuration.points, b.configuration.points)


def test_points_stay_feasible():
    region = equilateral_triangle(0.5)
    rep = optimize(region, 60, seed=3, restarts=2)
    z = rep.configuration.points
    assert np.all(np.abs(z) <= 1 + 1e-12)
    assert not np.any(region.contains(z))


def test_separation_floor():
    # Lemma-style floor: n^3 * min separation stays away from zero
    for n in (50, 100):
        rep = optimize(EmptyRegion(), n, seed=0, restarts=2)
        assert n**3 * rep.min_separation > 1.0


def test_r_estimate_increases_with_n():
    values = [optimize(EmptyRegion(), n, seed=0, restarts=2).r_estimate
              for n in (20, 40, 80)]
    assert values[0] < values[1] < values[2] < 0.75


def test_rate_study_empty():
    seq, limit = rate_study(EmptyRegion(), (40, 80, 120), seed=0, restarts=2,
                            threads=4)
    assert len(seq) == 3
    assert abs(limit - 0.75) / 0.75 < 0.02


def test_optimize_validation():
    with pytest.raises(ValueError):
        optimize(Disk(0j, 0.5), 1)
    with pytest.raises(ValueError):
        optimize(Disk(0j, 0.5), 10, restarts=0)
    with pytest.raises(ValueError):
        optimize(Disk(0.8, 0.5), 10)
    with pytest.raises(ValueError):
        optimize(Disk(0j, 1.0), 10)  # hole fills the whole disk
    with pytest.raises(ValueError):
        rate_study(EmptyRegion(), (40, 80))


def test_configuration_flags_infeasible():
    region = Disk(0j, 0.5)
    bad = configuration(np.array([0.1 + 0j, 0.8 + 0j]), region)
    assert not bad.feasible  # first point sits inside the hole
    good = configuration(np.array([0.6 + 0j, -0.7 + 0j]), region)
    assert good.feasible

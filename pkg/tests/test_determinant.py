"""Determinant route: basis, assembly, spectra, probabilities, limits."""

import math

import numpy as np
import pytest

from ginhole.determinant import (HoleMatrix, assemble, basis_log,
                                 default_order, limit_estimate, log_det,
                                 log_hole_probability, log_partition)
from ginhole.geometry import (Annulus, Disk, Ellipse, EmptyRegion,
                              QuadratureRule, equilateral_triangle)
from ginhole.kostlan import RadialHoleSpec, log_hole_radial


def test_basis_log_values():
    # k = 1: log of e^{-|z|^2/2}/sqrt(pi)
    logmag, phase = basis_log(1, np.array([0j, 1.0 + 0j]))
    assert logmag[0] == pytest.approx(-0.5 * math.log(math.pi), rel=1e-14)
    assert logmag[1] == pytest.approx(-0.5 - 0.5 * math.log(math.pi),
                                      rel=1e-14)
    assert phase[0] == 0.0
    # k = 2 at z = i: magnitude |z| e^{-1/2} / sqrt(pi), phase pi/2
    logmag, phase = basis_log(2, np.array([1j]))
    assert logmag[0] == pytest.approx(-0.5 - 0.5 * math.log(math.pi),
                                      rel=1e-13)
    assert phase[0] == pytest.approx(math.pi / 2, rel=1e-14)


def test_basis_orthonormal():
    # Gram matrix over a large disk is close to the identity
    n = 12
    m = assemble(Disk(0j, 1.0), 8.0, n, method="quadrature")
    a = np.eye(n) - m.entries  # recover A on the big disk
    assert np.max(np.abs(a - np.eye(n))) < 1e-10


def test_single_mode_disk_exact():
    # n = 1 hole matrix entry for a centered disk: Q(1, (ra)^2) = e^{-(ra)^2}
    m = assemble(Disk(0j, 0.5), 3.0, 1)
    assert m.entries[0, 0] == pytest.approx(math.exp(-2.25), rel=1e-12)
    assert log_det(m) == pytest.approx(-2.25, rel=1e-12)


def test_radial_and_quadrature_agree():
    region = Annulus(0.3, 0.6)
    r, n = 3.0, 40
    mr = assemble(region, r, n, method="radial")
    mq = assemble(region, r, n, method="quadrature")
    assert mr.method == "radial"
    assert mq.method == "quadrature"
    assert np.max(np.abs(mr.entries - mq.entries)) < 1e-10
    assert log_det(mr) == pytest.approx(log_det(mq), abs=1e-8)


def test_rotation_invariance_diagonal():
    # radial holes produce diagonal hole matrices in the 2D route too
    m = assemble(Disk(0j, 0.5), 2.0, 12, method="quadrature")
    off = m.entries - np.diag(np.diag(m.entries))
    assert np.max(np.abs(off)) < 1e-12


def test_spectrum_flags():
    m = assemble(Ellipse(0.6, 0.4), 2.0, 20)
    assert isinstance(m, HoleMatrix)
    assert m.spectrum_ok
    assert m.eig_min >= -1e-8
    assert m.eig_max <= 1 + 1e-8
    assert m.hermitian_defect < 1e-12


def test_matches_radial_product():
    # determinant route equals the gamma-product route for radial holes
    region = Annulus(0.3, 0.6)
    r = 3.0
    res = log_hole_radial(RadialHoleSpec(bands=((0.3, 0.6),), scale=r))
    m = assemble(region, r, 60)
    assert log_det(m) == pytest.approx(res.log_p, abs=1e-8)


def test_log_hole_probability_monotone_in_scale():
    region = Disk(0j, 0.5)
    vals = [log_hole_probability(region, r).log_probability
            for r in (1.0, 2.0, 3.0)]
    assert vals[0] > vals[1] > vals[2]


def test_order_stabilization():
    # past the default order the value is flat in n
    region = Disk(0j, 0.5)
    r = 3.0
    base = log_hole_probability(region, r).log_probability
    more = log_hole_probability(region, r, n=default_order(r) + 60)
    assert more.log_probability == pytest.approx(base, abs=1e-10)


def test_default_order():
    assert default_order(3.0) == 58
    assert default_order(0.0) == 40


def test_empty_region_and_zero_scale():
    m = assemble(EmptyRegion(), 4.0, 10)
    assert np.array_equal(m.entries, np.eye(10))
    assert log_det(m) == 0.0
    m0 = assemble(Disk(0j, 0.5), 0.0, 10)
    assert log_det(m0) == 0.0


def test_log_det_guards():
    m = assemble(Disk(0j, 0.5), 2.0, 20)
    bad = HoleMatrix(order=2, entries=np.diag([1.0, -1e-3]),
                     assembly_error=0.0, hermitian_defect=0.0,
                     eig_min=-1e-3, eig_max=1.0, spectrum_ok=False,
                     region=m.region, scale=1.0, method="radial")
    with pytest.raises(ValueError):
        log_det(bad)
    zero = HoleMatrix(order=2, entries=np.diag([1.0, 0.0]),
                      assembly_error=0.0, hermitian_defect=0.0,
                      eig_min=0.0, eig_max=1.0, spectrum_ok=True,
                      region=m.region, scale=1.0, method="radial")
    assert log_det(zero) == -math.inf


def test_n_sweep_sequence():
    res = log_hole_probability(Annulus(0.3, 0.6), 3.0, n_sweep=(40, 60, 80))
    assert res.order == 80
    assert len(res.sequence) == 3
    # stabilized: all sweep values agree
    vals = [lp for _, lp in res.sequence]
    assert max(vals) - min(vals) < 1e-9


def test_limit_estimate_disk():
    seq, c0 = limit_estimate(Disk(0j, 0.5), (40, 80, 160))
    vals = [v for _, v in seq]
    assert all(b > a for a, b in zip(vals, vals[1:]))  # increasing to c0
    assert abs(c0 - (-0.015625)) / 0.015625 < 0.10


def test_limit_estimate_validation():
    with pytest.raises(ValueError):
        limit_estimate(Disk(0j, 0.5), (40, 80))
    with pytest.raises(ValueError):
        limit_estimate(Disk(0j, 0.5), (80, 40, 160))
    with pytest.raises(ValueError):
        limit_estimate(Disk(0.8, 0.5), (40, 80, 160))


def test_assemble_validation():
    with pytest.raises(ValueError):
        assemble(Disk(0j, 0.5), -1.0, 10)
    with pytest.raises(ValueError):
        assemble(Disk(0j, 0.5), 2.0, 0)
    with pytest.raises(ValueError):
        assemble(Disk(0j, 0.5), 2.0, 10, method="sorcery")


def test_quadrature_error_bound_small():
    res = log_hole_probability(Ellipse(0.6, 0.4), 2.0)
    assert res.quadrature_error_bound < 1e-10


def test_log_partition_small_n():
    # n = 1: log(pi); n = 2: 2 log(pi) - log 2
    assert log_partition(1) == pytest.approx(math.log(math.pi), rel=1e-15)
    assert log_partition(2) == pytest.approx(2 * math.log(math.pi)
                                             - math.log(2.0), rel=1e-15)


def test_log_partition_refuses():
    with pytest.raises(ValueError):
        log_partition(0)


def test_triangle_quadrature_route():
    # non-radial shape through the 2D assembly: spectrum stays valid and
    # the probability shrinks with scale
    tri = equilateral_triangle(0.5)
    a = log_hole_probability(tri, 2.0)
    b = log_hole_probability(tri, 3.0)
    assert a.log_probability > b.log_probability
    assert a.quadrature_error_bound < 1e-9

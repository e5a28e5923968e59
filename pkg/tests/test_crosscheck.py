"""Cross-validation reports: routes, tolerances, floor, persistence."""

import json

import numpy as np
import pytest

from ginhole.crosscheck import (append_report, cross_validate, read_reports)
from ginhole.geometry import Annulus, Disk, EmptyRegion, Polygon

# small but honest route settings so the suite stays fast
FAST = dict(fekete_orders=(40, 80, 120), restarts=4, threads=4)


@pytest.fixture(scope="module")
def disk_report():
    return cross_validate(Disk(0j, 0.5), **FAST)


def test_disk_all_routes_pass(disk_report):
    rep = disk_report
    assert set(rep.routes) == {"closed_form", "balayage", "fekete",
                               "det_extrapolation", "kostlan"}
    assert rep.reference_route == "closed_form"
    assert rep.passed
    assert all(rep.passes.values())
    assert not rep.floor_violations


def test_disk_routes_near_truth(disk_report):
    want = 0.765625
    assert disk_report.routes["closed_form"] == want
    assert abs(disk_report.routes["balayage"] - want) < 1e-6
    assert abs(disk_report.routes["fekete"] - want) / want < 0.02
    excess = want - 0.75
    assert abs(disk_report.routes["det_extrapolation"] - want) / excess < 0.10
    assert abs(disk_report.routes["kostlan"] - want) / excess < 0.03


def test_gap_keys_complete(disk_report):
    names = sorted(disk_report.routes)
    want = {f"{a}|{b}" for i, a in enumerate(names) for b in names[i + 1:]}
    assert set(disk_report.gaps) == want
    assert all(v >= 0 for v in disk_report.gaps.values())


def test_non_catalog_reference_is_balayage():
    square = Polygon((0.4 + 0.4j, -0.4 + 0.4j, -0.4 - 0.4j, 0.4 - 0.4j))
    rep = cross_validate(square, **FAST)
    assert rep.reference_route == "balayage"
    assert "closed_form" not in rep.routes
    assert "kostlan" not in rep.routes
    assert rep.passed


def test_empty_region_floor_flag():
    # the true constant sits on the 3/4 floor; the fekete estimate is
    # biased low at finite n, so the floor flag trips and fails the
    # report while every tolerance check still passes
    rep = cross_validate(EmptyRegion(), **FAST)
    assert rep.routes["closed_form"] == 0.75
    assert rep.routes["balayage"] == 0.75
    assert rep.routes["kostlan"] == 0.75
    assert abs(rep.routes["det_extrapolation"] - 0.75) < 1e-12
    assert all(rep.passes.values())
    assert rep.floor_violations == ("fekete",)
    assert not rep.passed


def test_report_round_trip(tmp_path, disk_report):
    path = tmp_path / "reports.jsonl"
    append_report(disk_report, str(path))
    append_report(disk_report, str(path))
    rows = read_reports(str(path))
    assert len(rows) == 2
    assert rows[0] == rows[1]
    assert rows[0]["region"] == {"shape": "disk", "center": [0.0, 0.0],
                                 "radius": 0.5}
    assert rows[0]["reference_route"] == "closed_form"
    assert rows[0]["passed"] is True
    assert rows[0]["routes"]["closed_form"] == 0.765625


def test_report_append_only(tmp_path, disk_report):
    path = tmp_path / "reports.jsonl"
    append_report(disk_report, str(path))
    first = path.read_bytes()
    append_report(disk_report, str(path))
    assert path.read_bytes()[:len(first)] == first


def test_report_lines_are_json(tmp_path, disk_report):
    path = tmp_path / "reports.jsonl"
    append_report(disk_report, str(path))
    for line in path.read_text().splitlines():
        json.loads(line)


def test_annulus_kostlan_route_present():
    rep = cross_validate(Annulus(0.3, 0.6), **FAST)
    assert "kostlan" in rep.routes
    assert rep.passed

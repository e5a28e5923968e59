"""Cross-validation: all independent routes on one region.

Each route reaches the rate constant through different mathematics
(closed form, swept-measure energy, determinant extrapolation, point
configurations, gamma products), so agreement is a strong correctness
signal.  The report records every route's value, pairwise gaps, and a
per-route verdict against the reference.

Takes a minute or two per region at these settings.
"""

from ginhole.crosscheck import cross_validate
from ginhole.geometry import Annulus, Polygon

for region in (Annulus(0.3, 0.6),
               Polygon((0.4 + 0.4j, -0.4 + 0.4j, -0.4 - 0.4j, 0.4 - 0.4j))):
    report = cross_validate(region, restarts=4, threads=4,
                            fekete_orders=(40, 80, 120))
    print(f"region: {region.to_json()}")
    for name in sorted(report.routes):
        mark = "ok  " if report.passes[name] else "FAIL"
        ref = "  <- reference" if name == report.reference_route else ""
        print(f"  {mark} {name:12s} {report.routes[name]:.9f}{ref}")
    print(f"  widest pairwise gap: "
          f"{max(report.gaps.values()):.2e}")
    print(f"  passed={report.passed}\n")

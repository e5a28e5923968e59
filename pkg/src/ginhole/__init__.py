"""Hole probabilities and hole-rate constants for Ginibre ensembles.

Three independent computational routes are provided and cross-validated:

* equilibrium-measure energy via boundary balayage (``balayage``,
  ``potentials``, ``catalog``),
* weighted Fekete point optimization (``fekete``),
* exact finite-n determinants and infinite-ensemble radial products
  (``determinant``, ``kostlan``).
"""

from ginhole.balayage import (
    BalayageSolution,
    r_u_from_measure,
    solve_balayage,
    witness_samples,
    witness_values,
)
from ginhole.catalog import (
    EMPTY_SET_RATE,
    ClosedFormEntry,
    NotInCatalogError,
    annulus_lambda,
    balayage_closed,
    catalog_entries,
    hole_rate,
    in_catalog,
    kostlan_slope_closed,
    r_prime_closed,
)
from ginhole.crosscheck import (
    CrossValidationReport,
    append_report,
    cross_validate,
    read_reports,
)
from ginhole.densities import BoundaryMeasure
from ginhole.determinant import (
    HoleMatrix,
    HoleProbResult,
    assemble,
    default_order,
    limit_estimate,
    log_det,
    log_hole_probability,
    log_partition,
)
from ginhole.fekete import (
    FeketeReport,
    PointConfiguration,
    min_separation,
    optimize,
    rate_study,
    weighted_log_product,
)
from ginhole.geometry import (
    Annulus,
    Cardioid,
    ConvergenceError,
    CustomRegion,
    Disk,
    Ellipse,
    EmptyRegion,
    HalfDisk,
    InvalidRegionError,
    Polygon,
    QuadratureRule,
    Region,
    area_moment,
    boundary_point,
    equilateral_triangle,
    exterior_ball_radius,
    fits_in_unit_disk,
    integrate,
    radial_decomposition,
    region_from_json,
)
from ginhole.potentials import (
    PlanarMeasure,
    equilibrium_candidate,
    log_energy,
    potential_at,
    unit_disk_uniform,
    weighted_energy,
)
from ginhole.kostlan import (
    RadialHoleResult,
    RadialHoleSpec,
    SlopeReport,
    band_slope_study,
    chernoff_bounds,
    log_hole_radial,
    reg_gamma,
    slope_study,
)

__all__ = [
    "Annulus",
    "BalayageSolution",
    "BoundaryMeasure",
    "Cardioid",
    "ClosedFormEntry",
    "ConvergenceError",
    "CrossValidationReport",
    "CustomRegion",
    "Disk",
    "EMPTY_SET_RATE",
    "Ellipse",
    "EmptyRegion",
    "FeketeReport",
    "HalfDisk",
    "HoleMatrix",
    "HoleProbResult",
    "InvalidRegionError",
    "NotInCatalogError",
    "PlanarMeasure",
    "PointConfiguration",
    "Polygon",
    "QuadratureRule",
    "RadialHoleResult",
    "RadialHoleSpec",
    "Region",
    "SlopeReport",
    "annulus_lambda",
    "append_report",
    "area_moment",
    "assemble",
    "balayage_closed",
    "band_slope_study",
    "boundary_point",
    "catalog_entries",
    "chernoff_bounds",
    "cross_validate",
    "default_order",
    "equilateral_triangle",
    "equilibrium_candidate",
    "exterior_ball_radius",
    "fits_in_unit_disk",
    "hole_rate",
    "in_catalog",
    "integrate",
    "kostlan_slope_closed",
    "limit_estimate",
    "log_det",
    "log_energy",
    "log_hole_probability",
    "log_hole_radial",
    "log_partition",
    "min_separation",
    "optimize",
    "potential_at",
    "r_prime_closed",
    "r_u_from_measure",
    "radial_decomposition",
    "rate_study",
    "read_reports",
    "reg_gamma",
    "region_from_json",
    "slope_study",
    "solve_balayage",
    "unit_disk_uniform",
    "weighted_energy",
    "weighted_log_product",
    "witness_samples",
    "witness_values",
]

__version__ = "0.1.0"

"""Exact toric resolutions of cyclic quotient singularities.

The package resolves the quotient of affine n-space by a cyclic group
acting with weights (a_1, ..., a_n), some weight equal to 1, by iterated
star subdivision of the positive orthant, and cross-checks the geometry
against a purely arithmetic expansion of the same data into a polynomial
of remainders.  All core arithmetic is exact.
"""

from .fan import (
    DEFAULT_SEED,
    Cone,
    Fan,
    FanValidation,
    GroupType,
    RayInfo,
    ResolutionReport,
    build_resolution,
    cone_multiplicity,
    det_int,
    discrepancy,
    euler_characteristic,
    lattice_contains,
    primitive_in_lattice,
    resolution_report,
    star_subdivide,
    subdivision_point,
    validate_fan,
)
from .polynomial import RemainderPolynomial, Term, expand
from .propfrac import INFINITY, ProperFraction
from .render import (
    fan_json_text,
    fan_to_json,
    fan_to_svg,
    polynomial_json_text,
    subdivision_tree_dot,
)
from .verify import (
    Comparison2D,
    SweepRecord,
    check_identities,
    compare_2d,
    family_type,
    hj_evaluate,
    hj_expansion,
    measure_type,
    summarize,
    sweep,
    write_sweep_csv,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_SEED",
    "INFINITY",
    "Comparison2D",
    "Cone",
    "Fan",
    "FanValidation",
    "GroupType",
    "ProperFraction",
    "RayInfo",
    "RemainderPolynomial",
    "ResolutionReport",
    "SweepRecord",
    "Term",
    "build_resolution",
    "check_identities",
    "compare_2d",
    "cone_multiplicity",
    "det_int",
    "discrepancy",
    "euler_characteristic",
    "expand",
    "family_type",
    "fan_json_text",
    "fan_to_json",
    "fan_to_svg",
    "hj_evaluate",
    "hj_expansion",
    "lattice_contains",
    "measure_type",
    "polynomial_json_text",
    "primitive_in_lattice",
    "resolution_report",
    "star_subdivide",
    "subdivision_point",
    "subdivision_tree_dot",
    "summarize",
    "sweep",
    "validate_fan",
    "write_sweep_csv",
]

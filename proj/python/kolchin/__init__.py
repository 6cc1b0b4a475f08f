"""Exact Kolchin dimension polynomials, Macaulay constants, and the Sit order.

Thin package around the ``_kolchin`` extension. Everything is exact integer
arithmetic; Python ints of any size cross the boundary losslessly.
"""

from ._kolchin import (
    DEFAULT_BUDGET,
    CrossCheckError,
    DifferentialSystem,
    ExponentSet,
    MinimalCandidate,
    NumPoly,
    ReportRow,
    ResourceError,
    binomial,
    classify_minimal_candidate,
    colon,
    count_free_points,
    dimension_polynomial,
    dimension_polynomial_ie,
    dimension_polynomial_rec,
    interpolate,
    is_kolchin,
    macaulay_constants,
    macaulay_nondecreasing,
    minimal_elements,
    minimizing_coefficients,
    order_of,
    reconstruct,
    single_equation_poly,
    sit_compare,
    stabilization_bound,
    standard_coefficient_report,
    system_dimension_polynomial,
    triangular_family,
    triangular_family_alt,
    unbounded_constants_family,
)

__all__ = [
    "DEFAULT_BUDGET",
    "CrossCheckError",
    "DifferentialSystem",
    "ExponentSet",
    "MinimalCandidate",
    "NumPoly",
    "ReportRow",
    "ResourceError",
    "binomial",
    "classify_minimal_candidate",
    "colon",
    "count_free_points",
    "dimension_polynomial",
    "dimension_polynomial_ie",
    "dimension_polynomial_rec",
    "interpolate",
    "is_kolchin",
    "macaulay_constants",
    "macaulay_nondecreasing",
    "minimal_elements",
    "minimizing_coefficients",
    "order_of",
    "reconstruct",
    "single_equation_poly",
    "sit_compare",
    "stabilization_bound",
    "standard_coefficient_report",
    "system_dimension_polynomial",
    "triangular_family",
    "triangular_family_alt",
    "unbounded_constants_family",
]

__version__ = "0.1.0"

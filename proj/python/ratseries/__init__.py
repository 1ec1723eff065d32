"""Rationality analysis of integer power series.

Exact Hankel-determinant testing and rational reconstruction, bivariate
restriction criteria H_m(w), transfinite-diameter / Chebyshev-constant
estimation on point clouds, Gamma-contour Cauchy quadrature and the explicit
Hankel bound, and the D-finite (ODE-driven) rationality pipeline.

All integer coefficient arithmetic is exact; python ints of any size pass
through unchanged.
"""

from ratseries._core import (  # noqa: F401
    AnalysisError,
    bell_chen_pipeline,
    bell_chen_pipeline_table,
    cauchy_coeff,
    chebyshev_upper,
    coeff_sup_bound,
    conclude_zero,
    contour_length,
    criterion_test,
    d_tau_consistency,
    dfinite_coeffs,
    expand_rational,
    fekete_points,
    find_m0,
    hankel_bound,
    hankel_det,
    hankel_poly,
    iota_capacity_check,
    kronecker_test,
    lacunary_series,
    min_modulus,
    ode_continue,
    reconstruct_rational,
    recurrence_from_ode,
    restriction_polys,
    sample_contour,
    slice_coeffs,
    symmetrization_check,
    transfinite_diameter,
)

__version__ = "0.1.0"

"""Numerical ranges of matrix products: support sweeps, elliptical regions,
projection-pair canonical forms, and theorem verification suites."""

from ._prodrange import (  # noqa: F401
    EllipseDisk,
    ProdrangeError,
    ProjPairCanonicalForm,
    VerifyReport,
    build_pair,
    containment_region,
    decompose_pair,
    ellipse_E,
    ellipse_from_2x2,
    ellipse_general,
    equality_check,
    essherm_dilation_region,
    herm_eig,
    lambda_pairing,
    mc_points,
    range_polygon,
    run_suite,
    spectrum_of_product_pos,
    sqrt_psd,
    strip_bounds_check,
    support,
    two_point_product_region,
    wpq_region,
)

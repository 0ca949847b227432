"""Exact E-polynomials of generator-count strata of punctual Hilbert schemes.

Two independent pipelines compute the same tables: closed-form q-series
expansion, and torus fixed-point enumeration followed by triangular
matrix inversion over the Laurent polynomial ring.  Everything is exact
integer arithmetic; the verification suite checks the pipelines against
each other and against the known small tables.
"""

from .laurent import (
    InexactDivisionError,
    LaurentPoly,
    gauss_binomial,
)
from .qseries import (
    NotInvertibleError,
    QSeries,
    euler_identity_check,
    product_factors,
    q_pochhammer,
    series_H,
    series_Hnnr,
    series_poincare_H,
    series_Y0,
    series_Y0_dual,
)
from .diagrams import (
    MarkedDiagram,
    alpha,
    count_partitions_with_mu,
    e_poly_Bnnr_fixed,
    e_poly_Hnnr_fixed,
    elbows,
    enumerate_marked,
    mu_max,
    mu_of_partition,
    partitions_of,
    q_boxes,
    tangent_character,
)
from .strata import (
    NonPolynomialCoefficientError,
    StrataMatrix,
    VerificationReport,
    build_A,
    build_A_inverse,
    build_G,
    build_G_inverse,
    build_R,
    chi_series,
    closed_form_B,
    closed_form_X,
    compute_B,
    compute_X,
    lemma_identity_check,
    verify_all,
)

__version__ = "0.1.0"

__all__ = [
    "InexactDivisionError",
    "LaurentPoly",
    "MarkedDiagram",
    "NonPolynomialCoefficientError",
    "NotInvertibleError",
    "QSeries",
    "StrataMatrix",
    "VerificationReport",
    "alpha",
    "build_A",
    "build_A_inverse",
    "build_G",
    "build_G_inverse",
    "build_R",
    "chi_series",
    "closed_form_B",
    "closed_form_X",
    "compute_B",
    "compute_X",
    "count_partitions_with_mu",
    "e_poly_Bnnr_fixed",
    "e_poly_Hnnr_fixed",
    "elbows",
    "enumerate_marked",
    "euler_identity_check",
    "gauss_binomial",
    "lemma_identity_check",
    "mu_max",
    "mu_of_partition",
    "partitions_of",
    "product_factors",
    "q_boxes",
    "q_pochhammer",
    "series_H",
    "series_Hnnr",
    "series_poincare_H",
    "series_Y0",
    "series_Y0_dual",
    "tangent_character",
    "verify_all",
]

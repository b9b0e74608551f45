"""Exact minor-summation and Pfaffian identity toolkit.

Exact linear algebra over the integers, rationals, and multivariate integer
polynomials; determinant and Pfaffian kernels; checkers for a family of
minor-summation and Pfaffian factorization identities; skew Schur
polynomials; and non-intersecting lattice-path counting that exercises the
identities on real instances.
"""

from .errors import (
    ConfigError,
    EnumerationGuardError,
    IndexRangeError,
    InexactDivisionError,
    MinorSumError,
    ParityError,
    RingMismatchError,
    RouteMismatchError,
    ScalarParseError,
    ShapeError,
    SkewSymmetryError,
    StaircaseError,
    UnknownIdentityError,
)
from .ring import (
    QQ,
    ZZ,
    IntegerRing,
    Poly,
    PolynomialRing,
    RationalRing,
    Ring,
    Scalar,
    ring_from_json_tag,
)
from .combinat import (
    IndexSet,
    PerfectMatching,
    as_partition,
    crossing_number,
    index_of_lambda,
    inv_word,
    is_horizontal_strip,
    lambda_of,
    matching_sign,
    perfect_matchings,
    subsets,
)
from .matrix import (
    Matrix,
    augment_hat,
    concat_columns,
    det_bareiss,
    det_cofactor,
    matrix_from_json_dict,
    matrix_to_json_dict,
    outer_product,
    pfaffian_laplace,
    pfaffian_matchings,
    structured,
)
from .identities import (
    IDENTITY_IDS,
    IdentityReport,
    check_ab,
    check_ab2,
    check_byun,
    check_cauchy_binet_pf,
    check_closed_forms,
    check_cor7,
    check_det_pf_square,
    check_iswa,
    check_lemma_aux,
    check_lemma_iswa,
    check_main1,
    check_main2,
    check_okada,
    check_rank1,
    f_AB,
    g_AB,
    minor_sum,
    sign_from_binom2,
    x1_closed_form,
    x2_closed_form,
)
from .symfun import check_cauchy, h_complete, skew_schur, xy_ring
from .paths import (
    PathProblem,
    brute_force_nonintersecting,
    count_fixed,
    count_free,
    count_paths,
    lindstrom_matrix,
)
from .cli import RunReport, VerifyConfig, run_verify

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "EnumerationGuardError",
    "IndexRangeError",
    "InexactDivisionError",
    "MinorSumError",
    "ParityError",
    "RingMismatchError",
    "RouteMismatchError",
    "ScalarParseError",
    "ShapeError",
    "SkewSymmetryError",
    "StaircaseError",
    "UnknownIdentityError",
    "QQ",
    "ZZ",
    "IntegerRing",
    "Poly",
    "PolynomialRing",
    "RationalRing",
    "Ring",
    "Scalar",
    "ring_from_json_tag",
    "IndexSet",
    "PerfectMatching",
    "as_partition",
    "crossing_number",
    "index_of_lambda",
    "inv_word",
    "is_horizontal_strip",
    "lambda_of",
    "matching_sign",
    "perfect_matchings",
    "subsets",
    "Matrix",
    "augment_hat",
    "concat_columns",
    "det_bareiss",
    "det_cofactor",
    "matrix_from_json_dict",
    "matrix_to_json_dict",
    "outer_product",
    "pfaffian_laplace",
    "pfaffian_matchings",
    "structured",
    "IDENTITY_IDS",
    "IdentityReport",
    "check_ab",
    "check_ab2",
    "check_byun",
    "check_cauchy",
    "check_cauchy_binet_pf",
    "check_closed_forms",
    "check_cor7",
    "check_det_pf_square",
    "check_iswa",
    "check_lemma_aux",
    "check_lemma_iswa",
    "check_main1",
    "check_main2",
    "check_okada",
    "check_rank1",
    "f_AB",
    "g_AB",
    "minor_sum",
    "sign_from_binom2",
    "x1_closed_form",
    "x2_closed_form",
    "h_complete",
    "skew_schur",
    "xy_ring",
    "PathProblem",
    "brute_force_nonintersecting",
    "count_fixed",
    "count_free",
    "count_paths",
    "lindstrom_matrix",
    "RunReport",
    "VerifyConfig",
    "run_verify",
    "__version__",
]

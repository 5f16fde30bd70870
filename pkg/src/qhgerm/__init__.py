"""Exact decision of right-equivalence for quasihomogeneous plane germs.

The package decides whether two non-homogeneous quasihomogeneous complex
polynomials in X, Y are analytically (equivalently bi-Lipschitz)
right-equivalent as germs at the origin, and constructs and verifies
explicit witness coordinate changes. Exact Gaussian-rational arithmetic
carries the verdicts; an mpmath-based numeric kernel provides independent
oracles and witness realization at arbitrary precision.
"""

from .errors import (
    AmbiguousClusteringError,
    BranchOutOfRangeError,
    DegenerateConfigurationError,
    EmptyInputError,
    FormulaMismatchError,
    InternalInconsistencyError,
    NegativeExponentError,
    NonConvergenceError,
    NotEquivalentVerdictError,
    NotQuasihomogeneousError,
    ParseError,
    QhgermError,
    WeightMismatchError,
    ZeroPolynomialError,
)
from .exact import (
    GQ_I,
    GQ_ONE,
    GQ_ZERO,
    GaussianRational,
    UniPoly,
    format_coefficient,
    format_unipoly,
    gcd_bezout,
    gq,
    taylor_shift,
)
from .polyio import (
    MODE_EXACT,
    MODE_NUMERIC,
    BivarPoly,
    X,
    Y,
    format_poly,
    parse_poly,
    poly_to_json_dict,
)
from .structure import (
    HOMOGENEOUS,
    MONOMIAL_LIKE,
    NON_HOMOGENEOUS_QH,
    NOT_QUASIHOMOGENEOUS,
    CanonicalForm,
    GermAnalysis,
    WeightSignature,
    analyze_germ,
    canonical_decompose,
    classify_germ,
    height_function,
    infer_weights,
    ord0,
    validate_weights,
)
from .numeric import (
    ComplexApprox,
    NumericMatch,
    RootCluster,
    cluster_roots,
    eval_bivar,
    find_roots,
    nth_root,
    numeric_match,
    to_mpc,
)
from .engine import (
    DEFAULT_PRECISION,
    DEFAULT_TOL,
    STATUS_EQUIVALENT,
    STATUS_INEQUIVALENT,
    STATUS_NOT_APPLICABLE,
    AffineMatch,
    RadicalScalar,
    ScaleClass,
    ShearTerm,
    VerificationReport,
    Verdict,
    Witness,
    affine_multiset_match,
    build_witness,
    cross_ratio,
    decide_equivalence,
    decide_from_text,
    j_from_cross_ratio,
    linear_multiset_match,
    scalar_to_mpc,
    verify_witness,
    whitney_compare,
    whitney_configuration,
    whitney_quartic,
    witness_branch_count,
)

__version__ = "1.0.0"

__all__ = [
    "AffineMatch",
    "AmbiguousClusteringError",
    "BivarPoly",
    "BranchOutOfRangeError",
    "CanonicalForm",
    "ComplexApprox",
    "DEFAULT_PRECISION",
    "DEFAULT_TOL",
    "DegenerateConfigurationError",
    "EmptyInputError",
    "FormulaMismatchError",
    "GQ_I",
    "GQ_ONE",
    "GQ_ZERO",
    "GaussianRational",
    "GermAnalysis",
    "HOMOGENEOUS",
    "InternalInconsistencyError",
    "MODE_EXACT",
    "MODE_NUMERIC",
    "MONOMIAL_LIKE",
    "NON_HOMOGENEOUS_QH",
    "NOT_QUASIHOMOGENEOUS",
    "NegativeExponentError",
    "NonConvergenceError",
    "NotEquivalentVerdictError",
    "NotQuasihomogeneousError",
    "NumericMatch",
    "ParseError",
    "QhgermError",
    "RadicalScalar",
    "RootCluster",
    "STATUS_EQUIVALENT",
    "STATUS_INEQUIVALENT",
    "STATUS_NOT_APPLICABLE",
    "ScaleClass",
    "ShearTerm",
    "UniPoly",
    "VerificationReport",
    "Verdict",
    "WeightMismatchError",
    "WeightSignature",
    "Witness",
    "X",
    "Y",
    "ZeroPolynomialError",
    "affine_multiset_match",
    "analyze_germ",
    "build_witness",
    "canonical_decompose",
    "classify_germ",
    "cluster_roots",
    "cross_ratio",
    "decide_equivalence",
    "decide_from_text",
    "eval_bivar",
    "find_roots",
    "format_coefficient",
    "format_poly",
    "format_unipoly",
    "gcd_bezout",
    "gq",
    "height_function",
    "infer_weights",
    "j_from_cross_ratio",
    "linear_multiset_match",
    "nth_root",
    "numeric_match",
    "ord0",
    "parse_poly",
    "poly_to_json_dict",
    "scalar_to_mpc",
    "taylor_shift",
    "to_mpc",
    "validate_weights",
    "verify_witness",
    "whitney_compare",
    "whitney_configuration",
    "whitney_quartic",
    "witness_branch_count",
]

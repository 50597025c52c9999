"""Exact fraction-free Gauss-Jordan elimination with determinant-ratio traces."""

__version__ = "0.1.0"

from .bareiss import FfLevel, Permutation, ff_eliminate, ff_step
from .cramer import SolveResult, cramer_classical, inverse, solve_gj, solve_many
from .errors import (
    DimensionMismatch,
    DivisionByZero,
    IndexOutOfBounds,
    InvalidCase,
    NonExactDivision,
    NotSquare,
    ParseError,
    SingularMatrix,
    StructurallySingular,
    TooLarge,
    ZeroPivot,
)
from .gauss_jordan import (
    GjLevel,
    GjTrace,
    closed_form_ratio,
    gj_closed_form_entry,
    gj_ff_step,
    gj_rational_oracle,
    gj_rational_step,
    gj_reduce,
    rref,
    verify_construction,
)
from .io import parse_matrix, parse_matrix_json, render_matrix, render_matrix_json
from .matrix import (
    BorderedMinorSpec,
    Matrix,
    bordered_minor,
    bordered_minor_above,
    bordered_minor_below,
    check_sylvester_identity,
    det_bareiss,
    det_cofactor,
    leading_principal_minor,
    submatrix,
)
from .scalar import exact_div, rational_from

__all__ = [
    "BorderedMinorSpec",
    "DimensionMismatch",
    "DivisionByZero",
    "FfLevel",
    "GjLevel",
    "GjTrace",
    "IndexOutOfBounds",
    "InvalidCase",
    "Matrix",
    "NonExactDivision",
    "NotSquare",
    "ParseError",
    "Permutation",
    "SingularMatrix",
    "SolveResult",
    "StructurallySingular",
    "TooLarge",
    "ZeroPivot",
    "bordered_minor",
    "bordered_minor_above",
    "bordered_minor_below",
    "check_sylvester_identity",
    "closed_form_ratio",
    "cramer_classical",
    "det_bareiss",
    "det_cofactor",
    "exact_div",
    "ff_eliminate",
    "ff_step",
    "gj_closed_form_entry",
    "gj_ff_step",
    "gj_rational_oracle",
    "gj_rational_step",
    "gj_reduce",
    "inverse",
    "leading_principal_minor",
    "parse_matrix",
    "parse_matrix_json",
    "rational_from",
    "render_matrix",
    "render_matrix_json",
    "rref",
    "solve_gj",
    "solve_many",
    "submatrix",
    "verify_construction",
]

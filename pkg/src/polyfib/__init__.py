"""Closed forms for polynomial-weighted sums of generalized Fibonacci numbers."""
from .closed_form import (
    ClosedFormTriple,
    CoefficientTuple,
    NonDegenerateError,
    SingularMatrixError,
    UpperTriangular,
    build_matrix_general,
    build_matrix_pell,
    family_sample,
    general_triple,
    monomial_triple,
    rhs_vector,
    solve_coefficients,
)
from .emit import ParseError, PolyExpr, UnsupportedExpression, parse_poly, render_identity, render_table
from .exact import Poly, Rational, binomial, poly_eval, poly_shift
from .sequence import (
    DegeneracyClass,
    InvalidParams,
    SeqParams,
    ZeroTermError,
    binet_float,
    classify,
    find_zero_terms,
    ratio_probe,
    terms,
)
from .verify import (
    InconsistentSystemError,
    ReconstructionResult,
    VerificationError,
    VerificationReport,
    brute_force_sum,
    reconstruct_triple,
    verify_triple,
)

__version__ = "0.1.0"

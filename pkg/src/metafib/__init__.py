"""metafib: exact arithmetic for Hofstadter-style nested recurrences.

Computes meta-Fibonacci sequences from arbitrary initial conditions under
configurable underflow policies, constructs quasipolynomial solution
families of every positive degree, verifies them exhaustively, and
detects quasipolynomial structure in computed sequences.
"""
from metafib.exact import (
    BinomialTerm,
    Polynomial,
    binom,
    finite_difference,
    format_poly,
    poly_from_samples,
)
from metafib.engine import (
    HOFSTADTER_Q,
    ForwardReferenceError,
    NestedRecurrence,
    NotExtendableError,
    SequenceBuffer,
    UnderflowError,
    UnderflowPolicy,
    compute,
    extend,
    iter_terms,
)
from metafib.closedform import (
    QuasipolySolution,
    WeightSequence,
    check_piece_lower_bound,
    check_piece_pascal,
    closed_form_buffer,
    golomb_polynomials,
    golomb_term,
    initial_condition,
    piece_polynomial,
    piece_value,
    q_identity_holds,
    solution_term,
)
from metafib.detect import QuasipolyFit, detect_quasipoly
from metafib.harness import (
    VerificationReport,
    verify_construction,
    verify_golomb,
    wellposed_scan,
)
from metafib.bfile import BFileError, read_bfile, write_bfile

__version__ = "0.1.0"

__all__ = [
    "BinomialTerm",
    "Polynomial",
    "binom",
    "finite_difference",
    "format_poly",
    "poly_from_samples",
    "HOFSTADTER_Q",
    "ForwardReferenceError",
    "NestedRecurrence",
    "NotExtendableError",
    "SequenceBuffer",
    "UnderflowError",
    "UnderflowPolicy",
    "compute",
    "extend",
    "iter_terms",
    "QuasipolySolution",
    "WeightSequence",
    "check_piece_lower_bound",
    "check_piece_pascal",
    "closed_form_buffer",
    "golomb_polynomials",
    "golomb_term",
    "initial_condition",
    "piece_polynomial",
    "piece_value",
    "q_identity_holds",
    "solution_term",
    "QuasipolyFit",
    "detect_quasipoly",
    "VerificationReport",
    "verify_construction",
    "verify_golomb",
    "wellposed_scan",
    "BFileError",
    "read_bfile",
    "write_bfile",
    "__version__",
]

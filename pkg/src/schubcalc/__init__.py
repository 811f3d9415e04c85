"""Exact Schubert calculus: Schubert polynomials, structure constants and mod-p certificates."""

from .errors import (
    BudgetExceededError,
    CompositePrimeError,
    DimensionMismatchError,
    ParseError,
    RankBoundError,
    SchubcalcError,
)
from .lr import grassmannian_permutation, lr_coefficient
from .permutation import (
    Permutation,
    code,
    code_inverse,
    descents,
    length,
    long_permutation,
    multiply,
    right_multiply_transposition,
    stabilize,
)
from .pipedreams import PipeDream, pipe_dreams
from .polyring import SparsePolynomial, x
from .schubert import (
    SchubertExpansion,
    expand_in_schubert_basis,
    is_positive,
    monk_multiply,
    positivity_certificate,
    product_expansion,
    schubert_coefficient,
    schubert_kostka,
    schubert_polynomial,
    verify_positivity_certificate,
)
from .witness import ModPWitness, PolySystem, count_solutions_mod_p, search_witness, verify_witness

__version__ = "0.1.0"

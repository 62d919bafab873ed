"""Exact-arithmetic toolkit for reciprocal (palindromic) integer polynomials.

Core objects: dense integer polynomials, the degree-halving transform
f(x) = x^n g(x + 1/x), resultant-based discriminants, index-divisibility
tests at a prime, monogenicity decisions, and parameterized family sweeps
with squarefree counting.
"""

from .polycore import (
    IntPoly,
    chebyshev_c,
    compose_power,
    cyclotomic_2aqb,
    half_to_reciprocal,
    is_reciprocal,
    parse_poly,
    poly_from_json,
    poly_from_text,
    poly_to_json,
    poly_to_text,
    reciprocal_to_half,
    reverse,
)
from .arithfactor import (
    IntFactorization,
    SquarefreeResult,
    factor_int,
    is_prime,
    is_squarefree_int,
)

__version__ = "0.1.0"

__all__ = [
    "IntFactorization",
    "IntPoly",
    "SquarefreeResult",
    "chebyshev_c",
    "compose_power",
    "cyclotomic_2aqb",
    "factor_int",
    "half_to_reciprocal",
    "is_prime",
    "is_reciprocal",
    "is_squarefree_int",
    "parse_poly",
    "poly_from_json",
    "poly_from_text",
    "poly_to_json",
    "poly_to_text",
    "reciprocal_to_half",
    "reverse",
    "__version__",
]

"""Exact arithmetic kernel: Q, Q[t], Q(t), Q[x1..xn], linear algebra, Groebner bases."""

from fractions import Fraction

from .expr import ParseError, parse_ratfunc
from .groebner import (
    BudgetExceeded,
    Emptiness,
    EmptinessResult,
    NonRationalSolutions,
    PositiveDimensional,
    decide_emptiness,
    groebner_basis,
    groebner_emptiness,
    ideal_dimension,
    normal_form,
    rational_solutions,
)
from .linalg import (
    SingularMatrixError,
    SparseEliminator,
    determinant,
    identity,
    integer_rank,
    inverse,
    kernel,
    mat_mul,
    rank,
    rref,
    sparse_kernel,
    sparse_rank,
    transpose,
)
from .mpoly import MultiPoly
from .poly import POLE, Pole, RatFunc, UniPoly, limit_at_zero, poly_gcd, rational_roots

Rational = Fraction

__all__ = [
    "Fraction", "Rational", "UniPoly", "RatFunc", "POLE", "Pole", "limit_at_zero", "poly_gcd",
    "rational_roots", "MultiPoly", "parse_ratfunc", "ParseError",
    "groebner_basis", "groebner_emptiness", "decide_emptiness", "Emptiness", "EmptinessResult",
    "BudgetExceeded", "ideal_dimension", "normal_form", "rational_solutions",
    "PositiveDimensional", "NonRationalSolutions",
    "kernel", "rank", "rref", "determinant", "inverse", "identity", "transpose", "mat_mul",
    "SingularMatrixError", "SparseEliminator", "sparse_kernel", "sparse_rank", "integer_rank",
]

"""Exact-arithmetic toolkit for x^2 = 2y^4 - 1 and its generalizations."""

__version__ = "0.1.0"

from .quad_field import QuadElem, Rational
from .pell_core import (
    A,
    Mat2,
    PellPair,
    binomial_t,
    closed_form,
    closed_form_matrix,
    eigen_check,
    generate,
    mat_pow,
    seed,
    solution_at,
    step,
)
from .power_filter import QuarticSolution, is_perfect_square, isqrt, nth_root, search_quartic
from .general_pell import (
    ConicForm,
    EquationSpec,
    PellClass,
    base_solutions,
    cf_sqrt,
    fundamental_unit,
    generate_family,
    reduce_spec,
    solve_general,
)
from .eqparse import EquationParseError, Token, parse, parse_equation, tokenize, unparse

__all__ = [
    "A",
    "ConicForm",
    "EquationParseError",
    "EquationSpec",
    "Mat2",
    "PellClass",
    "PellPair",
    "QuadElem",
    "QuarticSolution",
    "Rational",
    "Token",
    "base_solutions",
    "binomial_t",
    "cf_sqrt",
    "closed_form",
    "closed_form_matrix",
    "eigen_check",
    "fundamental_unit",
    "generate",
    "generate_family",
    "is_perfect_square",
    "isqrt",
    "mat_pow",
    "nth_root",
    "parse",
    "parse_equation",
    "reduce_spec",
    "search_quartic",
    "seed",
    "solution_at",
    "solve_general",
    "step",
    "tokenize",
    "unparse",
]

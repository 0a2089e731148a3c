"""Quadratic algebraic integers with palindromic continued fraction periods."""

from .errors import PalinCFError
from .fibpoly import FibParams, fib, mmm_construct, mmm_k_min
from .palindromes import (
    Palindrome,
    admissible_s,
    construct,
    enumerate_sqrtD,
    is_algebraic_integer,
    k_min,
    sqrt_admissibility,
)
from .pell import (
    PellSolution,
    fundamental_negative,
    fundamental_positive,
    lift_neg4,
    lift_pos4,
    pell_oracle,
)
from .raney import LRWord, beta, cf_to_word, creepers, double, sleepers, word_to_cf
from .surd import CFExpansion, QuadraticSurd, canonicalize, convergents, eval_periodic, expand

__version__ = "0.1.0"

__all__ = [
    "PalinCFError",
    "FibParams",
    "fib",
    "mmm_construct",
    "mmm_k_min",
    "Palindrome",
    "admissible_s",
    "construct",
    "enumerate_sqrtD",
    "is_algebraic_integer",
    "k_min",
    "sqrt_admissibility",
    "PellSolution",
    "fundamental_negative",
    "fundamental_positive",
    "lift_neg4",
    "lift_pos4",
    "pell_oracle",
    "LRWord",
    "beta",
    "cf_to_word",
    "creepers",
    "double",
    "sleepers",
    "word_to_cf",
    "CFExpansion",
    "QuadraticSurd",
    "canonicalize",
    "convergents",
    "eval_periodic",
    "expand",
]

"""Rational solutions of first-order difference equations in F(alpha, beta).

sigma fixes the constants and maps alpha -> beta, beta -> u*alpha + v*beta,
which models index shifts of sequences such as Fibonacci, Lucas and Pell.
"""

from .bipoly import ALPHA, BETA, BiPoly, RatFun, gcd, lcm, squarefree_part
from .difffield import BOUND_EXCEEDED, DiffField, Splitting, SpreadResult
from .exactnum import FieldElem, Rat
from .gosper import AbcForm, abc_decompose, sigma_ratio, solve_key_equation, solve_trivial
from .polysolve import DegreeStrategy, SearchLimits, default_degree, solve_poly
from .solver import Outcome, solve_equation
from .undenom import DenomReport, clear_to_polynomial, finite_denominator, solve_nontrivial

__all__ = [
    "ALPHA",
    "BETA",
    "BiPoly",
    "RatFun",
    "gcd",
    "lcm",
    "squarefree_part",
    "BOUND_EXCEEDED",
    "DiffField",
    "Splitting",
    "SpreadResult",
    "FieldElem",
    "Rat",
    "AbcForm",
    "abc_decompose",
    "sigma_ratio",
    "solve_key_equation",
    "solve_trivial",
    "DegreeStrategy",
    "SearchLimits",
    "default_degree",
    "solve_poly",
    "Outcome",
    "solve_equation",
    "DenomReport",
    "clear_to_polynomial",
    "finite_denominator",
    "solve_nontrivial",
]

from fractions import Fraction

import pytest

from bivsum.bipoly import ALPHA as a, BETA as b, ONE, BiPoly, RatFun
from bivsum.errors import NotFound, ZeroInput
from bivsum.exactnum import FieldElem
from bivsum.gosper import (
    AbcForm,
    abc_decompose,
    candidate_indices,
    sigma_ratio,
    solve_key_equation,
    solve_trivial,
)
import properties

L1 = FieldElem(Fraction(1, 2), Fraction(1, 2), 5)
M_MAX = 30


def test_sigma_ratio_examples(fib, pell):
    assert sigma_ratio(RatFun(a, b * (a + b)), fib) == RatFun(b ** 2, a * (a + 2 * b))
    assert sigma_ratio(RatFun(1, (b - a) * a), fib) == RatFun(b - a, b)
    assert sigma_ratio(RatFun(a, (b - 2 * a) * b), pell) == RatFun(b ** 2 * (b - 2 * a), a ** 2 * (a + 2 * b))
    with pytest.raises(ZeroInput):
        sigma_ratio(RatFun(0), fib)


def test_abc_examples(fib, pell):
    abc = abc_decompose(RatFun(b ** 2, a * (a + 2 * b)), fib)
    assert (abc.A, abc.B, abc.C) == (b, a + 2 * b, a)
    abc = abc_decompose(RatFun(b - a, b), fib)
    assert (abc.A, abc.B, abc.C) == (b - a, b, ONE)
    abc = abc_decompose(RatFun(b ** 2 * (b - 2 * a), a ** 2 * (a + 2 * b)), pell)
    assert (abc.A, abc.B, abc.C) == (b - 2 * a, a + 2 * b, a ** 2)
    assert abc.steps[0].s == b ** 2


def test_key_equation_examples(fib, pell):
    abc = AbcForm(b, a + 2 * b, a)
    assert solve_key_equation(1, -1, abc, fib) == RatFun(-1)
    abc = AbcForm(b - a, b, ONE)
    assert solve_key_equation(1, 1, abc, fib) == RatFun(BiPoly.const(L1 ** 2), fib.h1)
    abc = AbcForm(b - 2 * a, a + 2 * b, a ** 2)
    assert solve_key_equation(1, -1, abc, pell) == RatFun((a - b).scale(Fraction(1, 2)))


def test_solve_trivial_examples(fib, pell):
    assert solve_trivial(1, -1, RatFun(a, b * (a + b)), fib) == RatFun(-1, b)
    lucas_g = RatFun(BiPoly.const(L1 ** 2), (b - a) * fib.h1)
    assert solve_trivial(1, 1, RatFun(1, (b - a) * a), fib) == lucas_g
    assert L1 ** 2 == FieldElem(Fraction(3, 2), Fraction(1, 2), 5)
    assert solve_trivial(1, -1, RatFun(a, (b - 2 * a) * b), pell) == RatFun(a - b, 2 * a * (b - 2 * a))


def test_antidifference_of_polynomial(pell):
    w = a ** 2
    f = pell.sigma(w) - w
    g = solve_trivial(1, -1, f, pell)
    diff = g - RatFun(w)
    assert diff.is_constant()
    assert pell.sigma(g) - g == RatFun(f)


def test_zero_rhs(fib):
    assert solve_trivial(2, 3, RatFun(0), fib) == RatFun(0)


def test_candidate_order():
    assert list(candidate_indices(1)) == [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]
    assert list(candidate_indices(0)) == [(0, 0)]
    assert list(candidate_indices(-3, 1)) == [(0, 0), (1, 0), (1, 1)]
    assert list(candidate_indices(1, -1)) == [(0, 0), (1, 0), (1, 1)]


def test_not_found_reports_limits(fib):
    # sigma(g) - g = 1/alpha has no rational solution
    with pytest.raises(NotFound) as exc:
        solve_trivial(1, -1, RatFun(1, a), fib)
    assert exc.value.limits_hit
    assert exc.value.report.candidates


# -- property suites ---------------------------------------------------------

def test_abc_postconditions_random():
    assert properties.abc_postconditions() >= 200


def test_key_solution_denominator_shape():
    assert properties.key_solution_shape() >= 200

import random
from fractions import Fraction

import pytest

from bivsum.bipoly import ALPHA as a, BETA as b, BiPoly
from bivsum.difffield import DiffField
from bivsum.errors import NotFound
from bivsum.exactnum import FieldElem
from bivsum.polysolve import DegreeStrategy, SearchLimits, default_degree, solve_linear_system, solve_poly
from helpers import nonzero_poly, random_poly

FIELDS = [DiffField(1, 1), DiffField(1, 2), DiffField(6, 1), DiffField(2, 3)]


def test_key_equation_fibonacci(fib):
    assert solve_poly(fib, b, -(a + b), a) == BiPoly.const(-1)


def test_key_equation_pell(pell):
    # (beta - 2 alpha) sigma(x) - sigma^-1(alpha + 2 beta) x = alpha^2
    lhs_b = -pell.sigma_inv(a + 2 * b)
    assert lhs_b == -(a + 2 * b).linear_substitute(pell.power(-1))
    p = solve_poly(pell, b - 2 * a, lhs_b, a ** 2)
    assert p == (a - b).scale(Fraction(1, 2))


def test_default_degree_examples():
    s = default_degree(b, -(a + b), a)
    assert (s.mode, s.d_start, s.d_max) == ("exact_bound", 0, 0)
    s = default_degree(BiPoly.const(1), BiPoly.const(-1), a ** 3 + b)
    assert (s.mode, s.d_start, s.d_max) == ("incremental", 3, 13)
    s = default_degree(b, a, a + 3 * b)
    assert (s.mode, s.d_start) == ("exact_bound", 0)
    assert default_degree(a, b ** 2, a).rigorous


def test_nontrivial_pell_numerator(pell):
    # g = p / alpha in beta*sigma(g) + alpha*g = alpha + 3 beta
    from bivsum.undenom import reduce_for_denominator
    a2, b2, f2 = reduce_for_denominator(b, a, a + 3 * b, a, pell)
    assert solve_poly(pell, a2, b2, f2) == b


def test_zero_rhs():
    F = FIELDS[0]
    assert solve_poly(F, a, b, BiPoly()) == BiPoly()
    # sigma(p) - p = 0 has the constant kernel
    p = solve_poly(F, BiPoly.const(1), BiPoly.const(-1), BiPoly(), allow_zero=False,
                   strategy=DegreeStrategy("incremental", 0, 2))
    assert p == BiPoly.const(1)


def test_not_found_flags():
    F = FIELDS[0]
    with pytest.raises(NotFound) as exc:
        solve_poly(F, a, b ** 2, BiPoly.const(1))
    assert exc.value.limits_hit is False  # deg a != deg b: the bound is a proof
    with pytest.raises(NotFound) as exc:
        solve_poly(F, BiPoly.const(1), BiPoly.const(-1), a ** 5 + b,
                   limits=SearchLimits(d_max=3))
    assert exc.value.limits_hit is True


def test_linear_system_canonical():
    e = FieldElem
    # x0 + x1 = 2 with x0 earlier in order: x0 pivots, x1 free -> (2, 0)
    cols = [{"r": e(1)}, {"r": e(1)}]
    assert solve_linear_system(cols, {"r": e(2)}) == [2, 0]
    assert solve_linear_system([{"r": e(1)}], {"r": e(1), "s": e(1)}) is None


def _forward(F, ca, cb, p):
    return ca * F.sigma(p) + cb * p


def test_residual_oracle_random():
    rng = random.Random(21)
    for _ in range(200):
        F = rng.choice(FIELDS)
        ca = nonzero_poly(rng, rng.randint(0, 2), lo=-3, hi=3)
        cb = nonzero_poly(rng, rng.randint(0, 2), lo=-3, hi=3)
        pstar = random_poly(rng, rng.randint(0, 3), lo=-3, hi=3)
        f = _forward(F, ca, cb, pstar)
        p = solve_poly(F, ca, cb, f)
        assert _forward(F, ca, cb, p) == f


def test_linearity_of_canonical_solution():
    rng = random.Random(22)
    for _ in range(40):
        F = rng.choice(FIELDS)
        ca = nonzero_poly(rng, 1, lo=-3, hi=3)
        cb = nonzero_poly(rng, 1, lo=-3, hi=3)
        f = _forward(F, ca, cb, random_poly(rng, 2, lo=-3, hi=3))
        if not f:
            continue
        c = FieldElem(rng.randint(1, 5), rng.randint(-2, 2), F.radicand if F.radicand != 1 else 1)
        p = solve_poly(F, ca, cb, f)
        assert solve_poly(F, ca, cb, f.scale(c)) == p.scale(c)


def test_exact_bound_soundness_brute_force():
    rng = random.Random(23)
    checked = 0
    while checked < 25:
        F = rng.choice(FIELDS)
        ca = nonzero_poly(rng, rng.randint(0, 1), lo=-3, hi=3)
        cb = nonzero_poly(rng, rng.randint(0, 1), lo=-3, hi=3)
        f = nonzero_poly(rng, rng.randint(0, 2), lo=-3, hi=3)
        s = default_degree(ca, cb, f)
        if s.mode != "exact_bound":
            continue
        try:
            solve_poly(F, ca, cb, f, strategy=s)
            continue
        except NotFound:
            pass
        checked += 1
        top = max(s.d_max, 0) + 3
        with pytest.raises(NotFound):
            solve_poly(F, ca, cb, f, strategy=DegreeStrategy("incremental", 0, top))


def test_degree_pruning_matches_full_window():
    rng = random.Random(29)
    for n in range(120):
        F = FIELDS[n % 4]
        if n % 2:
            # make some eigenform monomial a kernel element
            k = rng.randint(1, 3)
            i = rng.randint(0, k)
            ca = nonzero_poly(rng, rng.randint(0, 1), lo=-3, hi=3)
            cb = ca.scale(-F.eigen_scalar(k, i))
        else:
            ca = nonzero_poly(rng, 1, lo=-3, hi=3)
            cb = ca.scale(FieldElem(rng.choice([-2, -1, 3])))
        f = _forward(F, ca, cb, random_poly(rng, rng.randint(0, 2), lo=-3, hi=3))
        if not f:
            continue
        pruned = default_degree(ca, cb, f, 6, F)
        full = default_degree(ca, cb, f, 6)
        assert pruned.mode == full.mode == "incremental"
        assert set(pruned.degrees()) <= set(full.degrees())
        assert solve_poly(F, ca, cb, f, strategy=pruned) == solve_poly(F, ca, cb, f, strategy=full)

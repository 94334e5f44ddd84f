import io
import json
import random
from fractions import Fraction

import pytest

from bivsum.bipoly import ALPHA as a, BETA as b, BiPoly, RatFun
from bivsum.difffield import DiffField
from bivsum.errors import ExprSyntaxError, MismatchedField, NotRenderable, RadicandMismatch
from bivsum.exactnum import FieldElem
from bivsum.gosper import solve_trivial
from bivsum.seqcli import (
    Identity,
    lucas_u,
    lucas_v,
    parse_expr,
    preset,
    render_sum_identity,
    sequence_values,
    verify_pointwise,
)
from bivsum.seqcli.cli import main
from helpers import nonzero_poly, random_poly

SQRT5 = FieldElem.sqrt(5)
FIB_F = RatFun(a, b * (a + b))
PELL_F = RatFun(a, (b - 2 * a) * b)
PELL_G = RatFun(a - b, 2 * a * (b - 2 * a))


# -- parser ------------------------------------------------------------------

@pytest.mark.parametrize("text, expected", [
    ("alpha", RatFun(a)),
    ("alpha^2 - 3*beta", RatFun(a ** 2 - 3 * b)),
    ("-alpha + beta", RatFun(b - a)),
    ("−alpha", RatFun(-a)),
    ("1/(alpha*beta)", RatFun(1, a * b)),
    ("(alpha + beta)^2/(2*beta)", RatFun((a + b) ** 2, 2 * b)),
    ("2/4", RatFun(BiPoly.const(Fraction(1, 2)))),
    ("alpha/alpha", RatFun(1)),
    ("2^3*alpha", RatFun(8 * a)),
    ("-2^2", RatFun(-4)),
])
def test_parse_examples(text, expected):
    assert parse_expr(text) == expected


def test_parse_sqrt():
    assert parse_expr("(1 + sqrt(5))/2*beta", 5) == RatFun(b.scale((1 + SQRT5) / 2))
    assert parse_expr("sqrt(20)", 5) == RatFun(BiPoly.const(SQRT5 * 2))
    assert parse_expr("sqrt(8)*alpha", 2) == RatFun(a.scale(FieldElem.sqrt(8)))


@pytest.mark.parametrize("text, pos", [
    ("alpha +", 7),
    ("alpha $ beta", 6),
    ("(alpha", 6),
    ("alpha beta", 6),
    ("alpha^beta", 6),
    ("1/0", 1),
    ("1/(alpha - alpha)", 1),
    ("0^0", 2),
    ("gamma", 0),
])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr(text)
    assert info.value.position == pos


def test_radicand_mismatch():
    with pytest.raises(RadicandMismatch):
        parse_expr("sqrt(2)*alpha", 5)
    # without a working field any radicand is accepted
    assert parse_expr("sqrt(5)") == RatFun(BiPoly.const(SQRT5))
    # perfect squares are rational and always accepted
    assert parse_expr("sqrt(9)", 5) == RatFun(3)


def test_print_parse_round_trip():
    rng = random.Random(51)
    elems = [SQRT5, FieldElem(Fraction(1, 3)), (1 - SQRT5) / 2]
    for _ in range(200):
        num = random_poly(rng, rng.randint(0, 3), lo=-6, hi=6, field_elems=elems)
        den = nonzero_poly(rng, rng.randint(0, 2), lo=-6, hi=6, field_elems=elems)
        r = RatFun(num, den)
        assert parse_expr(str(r), 5) == r, str(r)


# -- sequences ---------------------------------------------------------------

def test_sequence_values():
    assert sequence_values(preset("fibonacci"), 6) == [1, 1, 2, 3, 5, 8, 13]
    assert sequence_values(preset("pell"), 5) == [0, 1, 2, 5, 12, 29]
    assert sequence_values(preset("lucas"), 5) == [2, 1, 3, 4, 7, 11]
    assert sequence_values(preset("pell-lucas"), 4) == [2, 2, 6, 14, 34]
    assert sequence_values(lucas_u(3, 2), 4) == [0, 1, 3, 7, 15]
    assert sequence_values(lucas_v(3, 2), 4) == [2, 3, 5, 9, 17]
    half = sequence_values(preset("fibonacci").with_initial(Fraction(1, 2)), 2)
    assert half == [Fraction(1, 2), 1, Fraction(3, 2)]


def test_lucas_u_matches_shifted_fibonacci_preset():
    u = sequence_values(lucas_u(1, -1), 21)
    fib = sequence_values(preset("fibonacci"), 20)
    assert u[1:] == fib


def test_unknown_preset():
    with pytest.raises(ValueError):
        preset("tribonacci")


# -- pointwise verification --------------------------------------------------

def test_verify_fibonacci(fib):
    g = solve_trivial(1, -1, FIB_F, fib)
    rep = verify_pointwise(fib, 1, -1, FIB_F, g, preset("fibonacci"), range(31))
    assert (rep.checked, rep.passed, rep.skipped, rep.failure) == (31, 31, [], None)


def test_verify_lists_skipped_indices(pell):
    g = RatFun(b, a)
    f = a + 3 * b
    rep = verify_pointwise(pell, b, a, f, g, preset("pell"), range(10))
    assert [n for n, _ in rep.skipped] == [0]
    assert rep.passed == rep.checked == 9 and rep.ok


def test_verify_reports_first_failure(fib):
    g = solve_trivial(1, -1, FIB_F, fib) + RatFun(a)
    rep = verify_pointwise(fib, 1, -1, FIB_F, g, preset("fibonacci"), range(5, 12))
    assert rep.failure["n"] == 5
    vals = sequence_values(preset("fibonacci"), 7)
    lhs = g.evaluate(vals[6], vals[7]) - g.evaluate(vals[5], vals[6])
    assert rep.failure["lhs"] == str(lhs)
    assert rep.failure["rhs"] == str(FIB_F.evaluate(vals[5], vals[6]))
    assert not rep.ok


def test_verify_rejects_other_field(fib):
    with pytest.raises(MismatchedField):
        verify_pointwise(fib, 1, -1, FIB_F, 0, preset("pell"), range(3))


def test_identity_rechecks(fib):
    with pytest.raises(ValueError):
        Identity(fib, 1, -1, FIB_F, RatFun(a))


# -- rendered sums, checked against closed forms derived by hand ------------

def test_render_fibonacci(fib):
    ident = Identity(fib, 1, -1, FIB_F, solve_trivial(1, -1, FIB_F, fib))
    rs = render_sum_identity(ident, preset("fibonacci"))
    assert rs.text == "sum(F_n/(F_n*F_{n+1} + F_{n+1}^2), n=0..k) = -1/F_{k+2} + 1"
    F = sequence_values(preset("fibonacci"), 40)
    for k in range(30):
        lhs, rhs = rs.evaluate(k)
        assert lhs == rhs == FieldElem(1 - Fraction(1, F[k + 2]))


def test_render_pell(pell):
    ident = Identity(pell, 1, -1, PELL_F, solve_trivial(1, -1, PELL_F, pell))
    rs = render_sum_identity(ident, preset("pell"))
    assert rs.n0 == 2
    assert rs.text.endswith(" + 3/4")
    P = sequence_values(preset("pell"), 40)
    for k in range(2, 30):
        # sum_{n=2}^k P_n/(P_{n-1} P_{n+1}) by partial fractions
        closed = Fraction(1, 2) * (Fraction(3, 2) - Fraction(1, P[k + 1]) - Fraction(1, P[k]))
        lhs, rhs = rs.evaluate(k)
        assert lhs == rhs == FieldElem(closed)


def test_render_lucas_alternating(fib):
    f = RatFun(1, a * b)
    g = solve_trivial(1, 1, f, fib)
    rs = render_sum_identity(Identity(fib, 1, 1, f, g), preset("lucas"))
    assert rs.alternating and rs.n0 == 0
    assert rs.text.startswith("sum((-1)^n*(")
    L = sequence_values(preset("lucas"), 40)
    lam = fib.lambda1

    def closed(K):
        # sum_{n=1}^K (-1)^(n-1)/(L_{n-1} L_n)
        sign = 1 if K % 2 else -1
        return lam * sign / (L[K] * (lam * L[K + 1] + L[K])) + SQRT5 / 10

    for k in range(25):
        lhs, rhs = rs.evaluate(k)
        assert lhs == rhs == closed(k + 1)


def test_render_other_coefficients(fib):
    g = RatFun(a)
    f = 2 * fib.sigma(g) + 3 * g
    with pytest.raises(NotRenderable):
        render_sum_identity(Identity(fib, 2, 3, f, g), preset("fibonacci"))


# -- command line ------------------------------------------------------------

def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_cli_solve_text():
    code, out = run("solve", "--sequence", "fibonacci", "--f", "alpha/(beta*(alpha + beta))")
    assert code == 0
    assert "g = -1/beta" in out
    assert "31/31 passed" in out


def test_cli_solve_json_schema():
    code, out = run("solve", "--sequence", "pell", "--a", "beta", "--b", "alpha",
                    "--f", "alpha + 3*beta", "--json")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) >= {"field", "input", "mode", "solution", "report", "denominator_report",
                        "warnings", "limits_hit", "verification"}
    assert doc["mode"] == "nontrivial"
    assert parse_expr(doc["solution"]["g"]) == RatFun(b, a)
    assert doc["verification"]["failure"] is None
    assert doc["denominator_report"]["finite_part"] == "alpha"


def test_cli_negative_expression_needs_equals_form():
    code, out = run("solve", "--u", "1", "--v", "1", "--a=alpha^2*(alpha - beta)*(alpha + 2*beta)",
                    "--b=-alpha^3*(alpha + beta)", "--f", "alpha^2", "--json")
    assert code == 0
    g = parse_expr(json.loads(out)["solution"]["g"], 5)
    assert RatFun(a ** 2 * (a - b) * (a + 2 * b)) * DiffField(1, 1).sigma(g) \
        - RatFun(a ** 3 * (a + b)) * g == RatFun(a ** 2)


def test_cli_not_found():
    code, out = run("solve", "--u", "1", "--v", "1", "--a=alpha^2*(alpha - beta)*(alpha + 2*beta)",
                    "--b=-alpha^3*(alpha + beta)", "--f", "alpha^2", "--infinite-degree-slack=-2")
    assert code == 2
    assert "warning: bound exhaustion" in out


def test_cli_degenerate_and_input_errors(capsys):
    assert run("solve", "--u", "-1", "--v", "1", "--f", "alpha")[0] == 3
    assert run("solve", "--u", "1", "--v", "1", "--f", "alpha +")[0] == 4
    assert run("solve", "--u", "1", "--v", "1", "--f", "sqrt(2)*alpha")[0] == 4
    assert run("solve", "--u", "1", "--f", "alpha")[0] == 4
    assert run("solve", "--sequence", "nope", "--f", "alpha")[0] == 4
    with pytest.raises(SystemExit) as info:
        run("solve", "--u", "1", "--v", "1")
    assert info.value.code == 4
    assert "error" in capsys.readouterr().err


def test_cli_verify():
    ok = run("verify", "--sequence", "fibonacci", "--f", "alpha/(beta*(alpha + beta))", "--g=-1/beta")
    assert ok[0] == 0 and "symbolic: holds" in ok[1]
    bad = run("verify", "--sequence", "fibonacci", "--f", "alpha/(beta*(alpha + beta))",
              "--g=-1/beta + 1 + alpha", "--json")
    doc = json.loads(bad[1])
    assert bad[0] == 1
    assert doc["symbolic"]["holds"] is False
    # alpha is a constant of summation at n = 0 since F_0 = F_1
    assert doc["verification"]["failure"]["n"] == 1


def test_cli_field_info():
    code, out = run("field-info", "--sequence", "pell", "--approx", "10")
    assert code == 0
    assert "lambda1 = 1 + sqrt(2)" in out and "2.414213562" in out
    assert "verdict: admissible" in out
    code, out = run("field-info", "--lucasU", "1", "1", "--json")
    assert code == 3
    assert json.loads(out)["field"]["verdict"].startswith("degenerate")


def test_cli_sum():
    code, out = run("sum", "--sequence", "fibonacci", "--f", "alpha/(beta*(alpha + beta))")
    assert code == 0
    assert "sum(F_n/(F_n*F_{n+1} + F_{n+1}^2), n=0..k) = -1/F_{k+2} + 1" in out

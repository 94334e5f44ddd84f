"""First-order equations a*sigma(g) + b*g = f with constant coefficients a, b.

The ratio r = sigma(f)/f is brought into the form (A/B) * sigma(C)/C, which
turns the equation into a key equation for x = C*g / (sigma^-1(B) * f).
Rational solutions x of the key equation have only eigenform powers in the
denominator, so those are enumerated by degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .bipoly import ONE, BiPoly, RatFun, gcd
from .difffield import DiffField, SpreadResult
from .errors import NotFound, ZeroInput
from .exactnum import FieldElem
from .polysolve import SearchLimits, solve_poly

__all__ = [
    "AbcForm",
    "AbcStep",
    "Candidate",
    "GosperReport",
    "sigma_ratio",
    "abc_decompose",
    "candidate_indices",
    "solve_key_equation",
    "run_trivial",
    "solve_trivial",
]


@dataclass(frozen=True)
class AbcStep:
    """One pass of the spread loop: s = gcd(p_prev, sigma^m q_prev)."""

    m: int
    s: BiPoly
    p: BiPoly
    q: BiPoly


@dataclass
class AbcForm:
    """r = (A/B) * sigma(C)/C with the coprimality conditions of a Gosper form."""

    A: BiPoly
    B: BiPoly
    C: BiPoly
    spread: SpreadResult | None = None
    steps: list = dc_field(default_factory=list)
    warnings: list = dc_field(default_factory=list)

    def ratio(self, field: DiffField) -> RatFun:
        return RatFun(self.A * field.sigma(self.C), self.B * self.C)

    def to_dict(self):
        return {
            "A": str(self.A),
            "B": str(self.B),
            "C": str(self.C),
            "spread": self.spread.to_dict() if self.spread else None,
            "steps": [{"m": s.m, "s": str(s.s), "p": str(s.p), "q": str(s.q)} for s in self.steps],
        }


@dataclass(frozen=True)
class Candidate:
    k: int
    i: int
    denominator: BiPoly
    found: bool
    note: str = ""

    def to_dict(self):
        return {"k": self.k, "i": self.i, "denominator": str(self.denominator),
                "found": self.found, "note": self.note}


@dataclass
class GosperReport:
    abc: AbcForm | None = None
    bound: int | None = None  # max(deg A, deg sigma^-1 B) - deg C
    candidates: list = dc_field(default_factory=list)
    x: RatFun | None = None
    solution: RatFun | None = None
    warnings: list = dc_field(default_factory=list)
    limits_hit: bool = False

    def to_dict(self):
        return {
            "kind": "trivial",
            "abc": self.abc.to_dict() if self.abc else None,
            "bound": self.bound,
            "candidates": [c.to_dict() for c in self.candidates],
            "x": str(self.x) if self.x is not None else None,
        }


def sigma_ratio(f, field: DiffField) -> RatFun:
    f = RatFun.coerce(f)
    if not f:
        raise ZeroInput("the ratio sigma(f)/f is undefined for f = 0")
    return field.sigma(f) / f


def abc_decompose(r, field: DiffField, m_max: int = 30) -> AbcForm:
    """Write r = (A/B) * sigma(C)/C.

    Only the finite parts of numerator and denominator take part in the
    spread loop; eigenform powers and the scalar go straight into A and B.
    B and C are monic.
    """
    r = RatFun.coerce(r)
    if not r:
        raise ZeroInput("cannot decompose the zero ratio")
    sp = field.split(r.num)
    sq = field.split(r.den)
    spread = field.spread(sp.finite_part, sq.finite_part, m_max)
    p, q = sp.finite_part, sq.finite_part
    C = ONE
    steps = []
    for m in spread:
        s = gcd(p, field.sigma(q, m))
        p = p.divide_exact(s)
        q = q.divide_exact(field.sigma(s, -m))
        for j in range(1, m + 1):
            C = C * field.sigma(s, -j)
        steps.append(AbcStep(m, s, p, q))
    scale = sp.unit / sq.unit
    A = (sp.infinite_part * p).scale(scale)
    B = sq.infinite_part * q
    C = C.monic()
    warnings = []
    if spread.bound_hit:
        warnings.append(
            f"spread search reached its bound m_max={m_max}; "
            "coprimality of A and shifts of B is only certified up to that bound"
        )
    return AbcForm(A, B, C, spread, steps, warnings)


def candidate_indices(m: int, slack: int = 0):
    """(k, i) pairs for eigenform denominators h1^(k-i) h2^i, in search order.

    With m <= 0 only the polynomial case k = 0 is tried unless slack widens
    the range; otherwise k runs over 0..m+1+slack.
    """
    top = max(0, slack) if m <= 0 else m + 1 + slack
    for k in range(top + 1):
        for i in range(k + 1):
            yield k, i


def solve_key_equation(a, b, abc: AbcForm, field: DiffField,
                       limits: SearchLimits = SearchLimits(), trace: list | None = None) -> RatFun:
    """Solve a*A*sigma(x) + b*sigma^-1(B)*x = C for rational x.

    For the denominator h = h1^(k-i) h2^i one has sigma(h) = mu*h, so with
    x = p/h the numerator satisfies (a*A/mu)*sigma(p) + b*sigma^-1(B)*p = C*h.
    Every tried candidate is appended to ``trace`` when given.
    """
    a = FieldElem.coerce(a)
    b = FieldElem.coerce(b)
    lhs_a = abc.A.scale(a)
    lhs_b = field.sigma_inv(abc.B).scale(b)
    m = max(abc.A.deg, lhs_b.deg) - abc.C.deg
    if trace is None:
        trace = []
    for k, i in candidate_indices(m, limits.infinite_degree_slack):
        h = field.eigen_monomial(k, i)
        mu = field.eigen_scalar(k, i)
        try:
            p = solve_poly(field, lhs_a.scale(mu.inverse()), lhs_b, abc.C * h, limits=limits)
        except NotFound as exc:
            trace.append(Candidate(k, i, h, False, str(exc)))
            continue
        trace.append(Candidate(k, i, h, True))
        return RatFun(p, h)
    raise NotFound(
        f"key equation has no solution with eigenform denominators of degree <= "
        f"{trace[-1].k if trace else 0}",
        limits_hit=True,
    )


def run_trivial(a, b, f, field: DiffField, limits: SearchLimits = SearchLimits()) -> GosperReport:
    """Full pipeline for constant a, b; the report carries the solution or None."""
    a = FieldElem.coerce(a)
    b = FieldElem.coerce(b)
    if not a or not b:
        raise ZeroInput("coefficients a and b must be nonzero")
    f = RatFun.coerce(f)
    report = GosperReport()
    if not f:
        report.solution = RatFun(0)
        return report
    abc = abc_decompose(sigma_ratio(f, field), field, limits.m_max)
    report.abc = abc
    report.warnings.extend(abc.warnings)
    if limits.infinite_degree_slack:
        report.warnings.append(
            f"infinite-degree slack {limits.infinite_degree_slack} changes the eigenform search range"
        )
    binv = field.sigma_inv(abc.B)
    report.bound = max(abc.A.deg, binv.deg) - abc.C.deg
    try:
        x = solve_key_equation(a, b, abc, field, limits, report.candidates)
    except NotFound as exc:
        report.limits_hit = exc.limits_hit
        report.warnings.append(f"bound exhaustion: {exc}")
        return report
    report.x = x
    g = x * RatFun(binv, abc.C) * f
    if a * field.sigma(g) + b * g != f:
        raise AssertionError(f"solver produced g = {g} which fails the equation")
    report.solution = g
    return report


def solve_trivial(a, b, f, field: DiffField, limits: SearchLimits = SearchLimits()) -> RatFun:
    """Rational g with a*sigma(g) + b*g = f for constants a, b, or raise NotFound."""
    report = run_trivial(a, b, f, field, limits)
    if report.solution is None:
        raise NotFound("no rational solution within the search bounds",
                       limits_hit=report.limits_hit, report=report)
    return report.solution

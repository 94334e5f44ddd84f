"""First-order equations a*sigma(g) + b*g = f with polynomial coefficients.

The denominator of a rational solution splits into a finite part, which
divides a product of shifted gcds computed from a and b, and an infinite
part made of eigenforms, which is searched degree by degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .bipoly import ONE, BiPoly, RatFun, gcd, lcm
from .difffield import DiffField, SpreadResult
from .errors import NotFound, ZeroCoefficient
from .gosper import AbcStep, Candidate, candidate_indices
from .polysolve import SearchLimits, solve_poly

__all__ = [
    "DenomReport",
    "finite_denominator",
    "reduce_for_denominator",
    "run_nontrivial",
    "solve_nontrivial",
    "clear_to_polynomial",
]


@dataclass
class DenomReport:
    finite_part: BiPoly | None = None
    spread_used: SpreadResult | None = None
    steps: list = dc_field(default_factory=list)  # AbcStep per spread element
    bound: int | None = None  # max(deg a, deg b) - deg f - deg finite_part
    candidates_tried: list = dc_field(default_factory=list)
    solution: RatFun | None = None
    warnings: list = dc_field(default_factory=list)
    limits_hit: bool = False

    def to_dict(self):
        return {
            "kind": "nontrivial",
            "finite_part": str(self.finite_part) if self.finite_part is not None else None,
            "spread": self.spread_used.to_dict() if self.spread_used else None,
            "steps": [{"m": s.m, "s": str(s.s), "a": str(s.p), "b": str(s.q)} for s in self.steps],
            "bound": self.bound,
            "candidates": [c.to_dict() for c in self.candidates_tried],
        }


def finite_denominator(a: BiPoly, b: BiPoly, field: DiffField, m_max: int = 30,
                       report: DenomReport | None = None) -> BiPoly:
    """Multiple of the finite part of every rational solution's denominator.

    Runs the shifted-gcd loop on the finite parts of a and b and returns
    the product of sigma^-j(s_i) for j = 1..m_i (monic).  A shift m = 0
    contributes no factor and is skipped: dividing gcd(a, b) out of both
    would hide factors of b that pair with a at a positive shift.
    """
    a, b = BiPoly.coerce(a), BiPoly.coerce(b)
    if not a or not b:
        raise ZeroCoefficient("coefficients a and b must be nonzero")
    ap = field.split(a).finite_part
    bp = field.split(b).finite_part
    spread = field.spread(ap, bp, m_max)
    qbar = ONE
    steps = []
    for m in spread:
        if m == 0:
            continue
        s = gcd(ap, field.sigma(bp, m))
        ap = ap.divide_exact(s)
        bp = bp.divide_exact(field.sigma(s, -m))
        for j in range(1, m + 1):
            qbar = qbar * field.sigma(s, -j)
        steps.append(AbcStep(m, s, ap, bp))
    qbar = qbar.monic()
    if report is not None:
        report.finite_part = qbar
        report.spread_used = spread
        report.steps = steps
        if spread.bound_hit:
            report.warnings.append(
                f"spread search reached its bound m_max={m_max}; "
                "the finite denominator is only certified up to that bound"
            )
    return qbar


def reduce_for_denominator(a: BiPoly, b: BiPoly, f: BiPoly, q: BiPoly, field: DiffField):
    """Polynomial equation for the numerator p of g = p/q.

    a*sigma(p)/sigma(q) + b*p/q = f is multiplied by lcm(q, sigma(q)) and the
    common content of the three coefficients is removed.
    """
    sq = field.sigma(q)
    g = gcd(q, sq)
    a2 = a * q.divide_exact(g)
    b2 = b * sq.divide_exact(g)
    f2 = f * q * sq.divide_exact(g)
    c = gcd(gcd(a2, b2), f2) if f2 else gcd(a2, b2)
    if c.deg > 0:
        a2, b2 = a2.divide_exact(c), b2.divide_exact(c)
        f2 = f2.divide_exact(c)
    return a2, b2, f2


def _candidate_reducer(a: BiPoly, b: BiPoly, f: BiPoly, qbar: BiPoly, field: DiffField):
    """reduce_for_denominator for q = qbar*h over eigenform monomials h.

    qbar is free of eigenforms, so with sigma(h) = mu*h the gcd of q and
    sigma(q) is h*gcd(qbar, sigma(qbar)); that part and the content of the
    two coefficients are computed once.  The equation is divided by mu, so
    results agree with reduce_for_denominator up to a common scalar.
    """
    sq = field.sigma(qbar)
    g0 = gcd(qbar, sq)
    a1 = a * qbar.divide_exact(g0)
    b1 = b * sq.divide_exact(g0)
    f1 = f * qbar * sq.divide_exact(g0)
    # content gcd(a1, b1, f1*h) = c1 * gcd(rest, h): the cofactors of
    # c1 = gcd(c0, f1) are coprime, so only eigenforms of rest can join in
    c0 = gcd(a1, b1)
    c1 = gcd(c0, f1) if c0.deg > 0 else ONE
    rest = c0.divide_exact(c1)

    def reduce(k: int, i: int):
        c, r = c1, rest
        for e, n in ((field.h1, k - i), (field.h2, i)):
            for _ in range(n):
                quo = r.try_divide(e) if r.deg > 0 else None
                if quo is None:
                    break
                c, r = c * e, quo
        a2 = a1.scale(field.eigen_scalar(k, i).inverse())
        b2, f2 = b1, f1 * field.eigen_monomial(k, i)
        if c.deg > 0:
            a2, b2, f2 = a2.divide_exact(c), b2.divide_exact(c), f2.divide_exact(c)
        return qbar * field.eigen_monomial(k, i), a2, b2, f2

    return reduce


def run_nontrivial(a, b, f, field: DiffField, limits: SearchLimits = SearchLimits()) -> DenomReport:
    """Full pipeline for polynomial a, b, f; the report carries the solution or None."""
    a, b, f = BiPoly.coerce(a), BiPoly.coerce(b), BiPoly.coerce(f)
    if not a or not b:
        raise ZeroCoefficient("coefficients a and b must be nonzero")
    report = DenomReport()
    if not f:
        report.solution = RatFun(0)
        return report
    qbar = finite_denominator(a, b, field, limits.m_max, report)
    m = max(a.deg, b.deg) - f.deg - qbar.deg
    report.bound = m
    if limits.infinite_degree_slack:
        report.warnings.append(
            f"infinite-degree slack {limits.infinite_degree_slack} changes the eigenform search range"
        )
    reduce = _candidate_reducer(a, b, f, qbar, field)
    for k, i in candidate_indices(m, limits.infinite_degree_slack):
        q, a2, b2, f2 = reduce(k, i)
        try:
            p = solve_poly(field, a2, b2, f2, limits=limits)
        except NotFound as exc:
            report.candidates_tried.append(Candidate(k, i, q, False, str(exc)))
            continue
        report.candidates_tried.append(Candidate(k, i, q, True))
        g = RatFun(p, q)
        if a * field.sigma(g) + b * g != f:
            raise AssertionError(f"solver produced g = {g} which fails the equation")
        report.solution = g
        return report
    report.limits_hit = True
    last = report.candidates_tried[-1].k if report.candidates_tried else 0
    report.warnings.append(
        f"bound exhaustion: no solution with eigenform degree <= {last} over the finite denominator"
    )
    return report


def solve_nontrivial(a, b, f, field: DiffField, limits: SearchLimits = SearchLimits()) -> RatFun:
    """Rational g with a*sigma(g) + b*g = f for polynomial a, b, f, or raise NotFound."""
    report = run_nontrivial(a, b, f, field, limits)
    if report.solution is None:
        raise NotFound("no rational solution within the search bounds",
                       limits_hit=report.limits_hit, report=report)
    return report.solution


def clear_to_polynomial(a, b, f):
    """Multiply the equation by the lcm of all denominators.

    Returns polynomial (a, b, f) with the same set of solutions g.
    """
    a, b, f = RatFun.coerce(a), RatFun.coerce(b), RatFun.coerce(f)
    if not a or not b:
        raise ZeroCoefficient("coefficients a and b must be nonzero")
    den = lcm(lcm(a.den, b.den), f.den)
    out = []
    for x in (a, b, f):
        out.append(x.num * den.divide_exact(x.den))
    return tuple(out)

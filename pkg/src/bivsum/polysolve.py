"""Polynomial solutions of a*sigma(p) + b*p = f by exact linear algebra."""

from __future__ import annotations

from dataclasses import dataclass

from .bipoly import ZERO, BiPoly, _order_key
from .errors import NotFound
from .exactnum import FieldElem

__all__ = ["SearchLimits", "DegreeStrategy", "default_degree", "solve_poly", "solve_linear_system"]


@dataclass(frozen=True)
class SearchLimits:
    """Every bound the solvers use; defaults match the CLI defaults."""

    m_max: int = 30  # spread search bound
    slack: int = 10  # extra trial degrees when leading terms may cancel
    d_max: int | None = None  # hard cap on the trial degree, if set
    infinite_degree_slack: int = 0  # widens (or, if negative, narrows) the eigenform loop


@dataclass(frozen=True)
class DegreeStrategy:
    mode: str  # "exact_bound" or "incremental"
    d_start: int
    d_max: int
    # exact_bound is only a proof of absence when deg a != deg b
    rigorous: bool = False
    # degrees in the window that can carry a solution, when known
    admissible: tuple | None = None

    def degrees(self):
        full = range(max(self.d_start, 0), self.d_max + 1)
        if self.admissible is None:
            return full
        return [d for d in full if d in self.admissible]


def _proportional(x: BiPoly, y: BiPoly):
    """c with y = c*x, or None."""
    if set(x.terms) != set(y.terms):
        return None
    m = next(iter(x.terms))
    c = y.terms[m] / x.terms[m]
    return c if all(y.terms[k] == x.terms[k] * c for k in x.terms) else None


def _resonant(field, ratio, d: int) -> bool:
    """Whether some h1^(d-i) h2^i has sigma-eigenvalue ``ratio``."""
    return any(field.eigen_scalar(d, i) == ratio for i in range(d + 1))


def default_degree(a: BiPoly, b: BiPoly, f: BiPoly, slack: int = 10, field=None) -> DegreeStrategy:
    """Pick the trial degrees for the numerator.

    Without cancellation between the leading forms of a*sigma(p) and b*p the
    degree of p is forced to deg f - max(deg a, deg b).  When the leading
    forms are proportional, b_L = c*a_L, that cancellation may happen and
    degrees are searched incrementally.  The top form of such a p satisfies
    sigma(p_d) = -c*p_d, so with ``field`` given only degrees where an
    eigenform monomial has that eigenvalue are kept besides the forced one.
    """
    da, db, df = a.deg, b.deg, f.deg
    c = _proportional(a.leading_form(), b.leading_form()) if da == db else None
    if c is None:
        d = df - da if da >= db else df - db
        return DegreeStrategy("exact_bound", d, d, rigorous=da != db)
    d0 = max(0, df - da)
    top = d0 + slack
    if field is None:
        return DegreeStrategy("incremental", d0, top)
    keep = tuple(d for d in range(d0, top + 1) if d == df - da or _resonant(field, -c, d))
    return DegreeStrategy("incremental", d0, top, admissible=keep)


def solve_linear_system(columns, rhs, allow_zero=True):
    """Solve sum_k x_k * columns[k] = rhs for sparse columns.

    ``columns`` is a list of dicts row_key -> FieldElem and ``rhs`` a dict.
    Gauss-Jordan elimination with pivots taken in column order; free
    variables are set to zero, which makes the returned vector the unique
    canonical representative for that order.  With ``allow_zero=False`` and a
    zero right-hand side the first free variable is set to one instead.
    Returns the solution list or None when the system is inconsistent.
    """
    rows: dict = {}
    for k, col in enumerate(columns):
        for r, c in col.items():
            if c:
                rows.setdefault(r, [{}, FieldElem(0)])[0][k] = c
    for r, c in rhs.items():
        if c:
            rows.setdefault(r, [{}, FieldElem(0)])[1] = c
    live = list(rows.values())
    by_col: dict = {}
    for row in live:
        for k in row[0]:
            by_col.setdefault(k, set()).add(id(row))
    index = {id(row): row for row in live}
    pivots = {}
    for k in range(len(columns)):
        cands = [index[i] for i in by_col.get(k, ()) if id(index[i]) not in pivots.values()]
        cands = [row for row in cands if k in row[0]]
        if not cands:
            continue
        prow = min(cands, key=lambda row: len(row[0]))
        inv = prow[0][k].inverse()
        prow[0] = {j: c * inv for j, c in prow[0].items()}
        prow[1] = prow[1] * inv
        for i in list(by_col.get(k, ())):
            row = index[i]
            if row is prow or k not in row[0]:
                continue
            factor = row[0][k]
            for j, c in prow[0].items():
                v = row[0].get(j, FieldElem(0)) - factor * c
                if v:
                    if j not in row[0]:
                        by_col.setdefault(j, set()).add(i)
                    row[0][j] = v
                else:
                    row[0].pop(j, None)
            row[1] = row[1] - factor * prow[1]
        pivots[k] = id(prow)
    for row in live:
        if not row[0] and row[1]:
            return None
    sol = [FieldElem(0)] * len(columns)
    free = [k for k in range(len(columns)) if k not in pivots]
    if not allow_zero and not any(rhs.values()):
        if not free:
            return None
        sol[free[0]] = FieldElem(1)
    for k, rid in pivots.items():
        row = index[rid]
        val = row[1]
        for j, c in row[0].items():
            if j != k and sol[j]:
                val = val - c * sol[j]
        sol[k] = val
    return sol


def _unknowns(d: int):
    monos = [(i, t - i) for t in range(d + 1) for i in range(t + 1)]
    monos.sort(key=_order_key, reverse=True)
    return monos


def solve_poly(field, a, b, f, strategy: DegreeStrategy | None = None,
               limits: SearchLimits = SearchLimits(), allow_zero=True) -> BiPoly:
    """A polynomial p with a*sigma(p) + b*p = f, or raise NotFound.

    Trial degrees come from ``strategy`` (default: :func:`default_degree`).
    The returned p is the canonical solution of the first degree that admits
    one and is checked by substitution before it is returned.
    """
    a, b, f = BiPoly.coerce(a), BiPoly.coerce(b), BiPoly.coerce(f)
    if not a or not b:
        raise ValueError("coefficients a and b must be nonzero")
    if not f and allow_zero:
        return ZERO
    if strategy is None:
        strategy = default_degree(a, b, f, limits.slack, field)
    degrees = list(strategy.degrees())
    capped = False
    if limits.d_max is not None and degrees and degrees[-1] > limits.d_max:
        degrees = [d for d in degrees if d <= limits.d_max]
        capped = True
    images = {}  # sigma(alpha^i beta^j), built incrementally
    sa = field.sigma(BiPoly.monomial(1, 0))
    sb = field.sigma(BiPoly.monomial(0, 1))

    def attempt(d):
        monos = _unknowns(d)
        cols = []
        for m in monos:
            img = images.get(m)
            if img is None:
                img = _sigma_monomial(m, sa, sb, images)
            col = a * img + b * BiPoly.monomial(*m)
            cols.append(col.terms)
        sol = solve_linear_system(cols, f.terms, allow_zero=allow_zero)
        return None if sol is None else BiPoly({m: c for m, c in zip(monos, sol)})

    # a solution of degree d is also one of every larger degree, so an
    # inconsistent top-degree system rules out the whole range at once
    if len(degrees) > 1 and attempt(degrees[-1]) is None:
        degrees = []
    for d in degrees:
        p = attempt(d)
        if p is None:
            continue
        if a * field.sigma(p) + b * p != f:
            raise AssertionError("linear solve produced a non-solution")
        return p
    rigorous = strategy.mode == "exact_bound" and strategy.rigorous and not capped
    raise NotFound(
        f"no polynomial solution for trial degrees {strategy.d_start}..{strategy.d_max}"
        + (f" (capped at {limits.d_max})" if capped else ""),
        limits_hit=not rigorous,
    )


def _sigma_monomial(m, sa, sb, cache):
    i, j = m
    if (i, j) == (0, 0):
        img = BiPoly.monomial(0, 0)
    elif i > 0:
        prev = cache.get((i - 1, j)) or _sigma_monomial((i - 1, j), sa, sb, cache)
        img = prev * sa
    else:
        prev = cache.get((0, j - 1)) or _sigma_monomial((0, j - 1), sa, sb, cache)
        img = prev * sb
    cache[m] = img
    return img

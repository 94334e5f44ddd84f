"""The bivariate difference field (F(alpha, beta), sigma).

sigma fixes F and acts by sigma(alpha) = beta, sigma(beta) = u*alpha + v*beta,
i.e. by substitution with the matrix ``((0, u), (1, v))``.  Reading alpha as
S_n and beta as S_{n+1}, sigma advances a sequence index by one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bipoly import BiPoly, RatFun, has_common_factor, squarefree_part
from .errors import (
    RatioRootOfUnity,
    RepeatedEigenvalue,
    UnitEigenvalue,
    ZeroParameter,
)
from .exactnum import FieldElem, as_fraction, normalize_radicand

__all__ = [
    "DiffField",
    "Splitting",
    "SpreadResult",
    "BOUND_EXCEEDED",
    "recurrence_matrix",
    "matrix_power",
]

#: Dispersion value reported when the bounded search saturates at m_max.
BOUND_EXCEEDED = math.inf

# values of lambda1/lambda2 + lambda2/lambda1 for roots of unity of order 1, 2, 3, 4, 6
_ROOT_OF_UNITY_TRACES = {Fraction(2), Fraction(-2), Fraction(-1), Fraction(0), Fraction(1)}


def recurrence_matrix(u, v):
    u = FieldElem.coerce(as_fraction(u))
    v = FieldElem.coerce(as_fraction(v))
    return ((FieldElem(0), u), (FieldElem(1), v))


def _matmul(x, y):
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def _matinv(x):
    det = x[0][0] * x[1][1] - x[0][1] * x[1][0]
    inv = det.inverse()
    return ((x[1][1] * inv, -x[0][1] * inv), (-x[1][0] * inv, x[0][0] * inv))


def matrix_power(mat, m: int):
    if m < 0:
        return matrix_power(_matinv(mat), -m)
    one, zero = FieldElem(1), FieldElem(0)
    result = ((one, zero), (zero, one))
    base = mat
    while m:
        if m & 1:
            result = _matmul(result, base)
        base = _matmul(base, base)
        m >>= 1
    return result


@dataclass(frozen=True)
class Splitting:
    """p = unit * h1**e1 * h2**e2 * finite_part, finite_part monic."""

    e1: int
    e2: int
    unit: FieldElem
    finite_part: BiPoly
    infinite_part: BiPoly

    def reconstruct(self) -> BiPoly:
        return (self.infinite_part * self.finite_part).scale(self.unit)


@dataclass(frozen=True)
class SpreadResult:
    """Bounded spread {m <= truncated_at : deg gcd(p, sigma^m q) > 0}."""

    values: tuple
    truncated_at: int

    @property
    def bound_hit(self) -> bool:
        # a hit at the bound itself suggests the true set continues past it
        return self.truncated_at in self.values

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __contains__(self, m):
        return m in self.values

    def to_dict(self):
        return {"values": list(self.values), "truncated_at": self.truncated_at,
                "bound_hit": self.bound_hit}


class DiffField:
    """Difference field with sigma(alpha) = beta, sigma(beta) = u*alpha + v*beta.

    Construction rejects parameter pairs for which the eigenvalue ratio is a
    root of unity, an eigenvalue is +-1, or the eigenvalues coincide; in the
    remaining fields the only homogeneous semi-invariant polynomials are
    products of the two eigenforms h1, h2.
    """

    def __init__(self, u, v):
        u = as_fraction(u)
        v = as_fraction(v)
        if u == 0 or v == 0:
            raise ZeroParameter(f"parameters must be nonzero, got u={u}, v={v}")
        disc = v * v + 4 * u
        if disc == 0:
            raise RepeatedEigenvalue(f"v^2 + 4u = 0 for u={u}, v={v}: repeated eigenvalue")
        trace = (v * v + 2 * u) / (-u)
        if trace in _ROOT_OF_UNITY_TRACES:
            raise RatioRootOfUnity(
                f"lambda1/lambda2 is a root of unity for u={u}, v={v} "
                f"(lambda1/lambda2 + lambda2/lambda1 = {trace})"
            )
        if u + v == 1 or u - v == 1:
            raise UnitEigenvalue(
                f"an eigenvalue is {'1' if u + v == 1 else '-1'} for u={u}, v={v}; "
                "such fields admit non-homogeneous semi-invariants and are not supported"
            )
        self.u = FieldElem(u)
        self.v = FieldElem(v)
        self.discriminant = disc
        self.radicand, _ = normalize_radicand(disc)
        root = FieldElem.sqrt(disc)
        self.lambda1 = (self.v + root) / 2
        self.lambda2 = (self.v - root) / 2
        self.matrix = recurrence_matrix(u, v)
        self._powers = {0: matrix_power(self.matrix, 0), 1: self.matrix}
        self._scalars = {}
        self.h1 = BiPoly.linear(1, self.lambda1 / self.u)
        self.h2 = BiPoly.linear(1, self.lambda2 / self.u)
        self.norm_form = BiPoly({(2, 0): self.u, (1, 1): self.v, (0, 2): -1})

    def __repr__(self):
        return f"DiffField(u={self.u}, v={self.v})"

    def __eq__(self, other):
        return isinstance(other, DiffField) and (self.u, self.v) == (other.u, other.v)

    def __hash__(self):
        return hash((self.u, self.v))

    # -- sigma --------------------------------------------------------------
    def power(self, m: int):
        mat = self._powers.get(m)
        if mat is None:
            mat = matrix_power(self.matrix, m)
            self._powers[m] = mat
        return mat

    def sigma(self, p, m: int = 1):
        """sigma^m applied to a polynomial or rational function (m may be negative)."""
        if m == 0:
            return p
        mat = self.power(m)
        if isinstance(p, RatFun):
            return p.map(lambda x: x.linear_substitute(mat))
        return BiPoly.coerce(p).linear_substitute(mat)

    def sigma_inv(self, p):
        return self.sigma(p, -1)

    # -- eigen data ---------------------------------------------------------
    def eigen_monomial(self, k: int, i: int) -> BiPoly:
        """h1**(k-i) * h2**i."""
        return self.h1 ** (k - i) * self.h2 ** i

    def eigen_scalar(self, k: int, i: int) -> FieldElem:
        """The c with sigma(h1**(k-i) * h2**i) = c * h1**(k-i) * h2**i."""
        c = self._scalars.get((k, i))
        if c is None:
            c = self.lambda1 ** (k - i) * self.lambda2 ** i
            self._scalars[k, i] = c
        return c

    def semi_invariant_scalar(self, p: BiPoly) -> FieldElem | None:
        """c with sigma(p) = c*p, or None when p is not semi-invariant."""
        p = BiPoly.coerce(p)
        if not p:
            raise ValueError("semi-invariance of the zero polynomial is undefined")
        s = self.sigma(p)
        lm = p.leading_monomial()
        if s.leading_monomial() != lm:
            return None
        c = s.terms[lm] / p.terms[lm]
        return c if s == p.scale(c) else None

    # -- spread, dispersion, splitting --------------------------------------
    def spread(self, p: BiPoly, q: BiPoly, m_max: int = 30) -> SpreadResult:
        if not p or not q:
            raise ValueError("spread needs nonzero polynomials")
        ps = squarefree_part(p)
        qs = squarefree_part(q)
        found = []
        if ps.deg > 0 and qs.deg > 0:
            mat = self.matrix
            cur = qs
            for m in range(m_max + 1):
                if has_common_factor(ps, cur):
                    found.append(m)
                if m < m_max:
                    cur = cur.linear_substitute(mat)
        return SpreadResult(tuple(found), m_max)

    def dispersion(self, p: BiPoly, q: BiPoly, m_max: int = 30):
        spr = self.spread(p, q, m_max)
        if not spr.values:
            return -1
        if spr.bound_hit:
            return BOUND_EXCEEDED
        return max(spr.values)

    def split(self, p: BiPoly) -> Splitting:
        """Separate the eigenform powers (infinite part) from the rest."""
        p = BiPoly.coerce(p)
        if not p:
            raise ValueError("cannot split the zero polynomial")
        rest = p
        exps = []
        for h in (self.h1, self.h2):
            e = 0
            while rest.deg > 0:
                q = rest.try_divide(h)
                if q is None:
                    break
                rest = q
                e += 1
            exps.append(e)
        unit = rest.leading_coefficient()
        finite = rest.monic()
        inf_part = self.h1 ** exps[0] * self.h2 ** exps[1]
        return Splitting(exps[0], exps[1], unit, finite, inf_part)

    # -- reporting ----------------------------------------------------------
    def to_dict(self):
        return {
            "u": str(self.u),
            "v": str(self.v),
            "D": self.radicand,
            "lambda1": str(self.lambda1),
            "lambda2": str(self.lambda2),
            "h1": str(self.h1),
            "h2": str(self.h2),
            "norm_form": str(self.norm_form),
        }

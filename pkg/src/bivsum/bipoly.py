"""Sparse bivariate polynomials F[alpha, beta] and reduced fractions F(alpha, beta).

Coefficients are :class:`~bivsum.exactnum.FieldElem`.  Monomials
``alpha**i * beta**j`` are keyed by ``(i, j)`` and ordered by total degree,
ties broken lexicographically with alpha > beta.  The gcd works in the
recursive view F[beta][alpha] with a primitive pseudo-remainder sequence; no
factorisation into irreducibles is performed anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import _zgcd
from .errors import FieldMismatch, NotDivisible
from .exactnum import FieldElem

__all__ = [
    "BiPoly",
    "RatFun",
    "gcd",
    "lcm",
    "squarefree_part",
    "ALPHA",
    "BETA",
    "ONE",
    "ZERO",
]

_F0 = FieldElem(0)
_F1 = FieldElem(1)


def _order_key(mono):
    i, j = mono
    return (i + j, i)


class BiPoly:
    """Immutable sparse polynomial in alpha and beta."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in dict(terms).items():
                c = FieldElem.coerce(c)
                if c:
                    i, j = mono
                    if i < 0 or j < 0:
                        raise ValueError(f"negative exponent in {mono}")
                    clean[(int(i), int(j))] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, terms: dict) -> "BiPoly":
        obj = object.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "BiPoly":
        c = FieldElem.coerce(c)
        return cls._from_clean({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "BiPoly":
        return cls({(i, j): c})

    @classmethod
    def coerce(cls, x) -> "BiPoly":
        if isinstance(x, BiPoly):
            return x
        return cls.const(x)

    @classmethod
    def linear(cls, ca, cb, c0=0) -> "BiPoly":
        return cls({(1, 0): ca, (0, 1): cb, (0, 0): c0})

    # -- basic structure --------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0, 0)}

    def constant_value(self) -> FieldElem:
        return self.terms.get((0, 0), _F0)

    @property
    def deg(self) -> int:
        """Total degree; -1 stands in for the degree of the zero polynomial."""
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def degree_in(self, var: int) -> int:
        if not self.terms:
            return -1
        return max(m[var] for m in self.terms)

    def leading_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=_order_key)

    def leading_coefficient(self) -> FieldElem:
        if not self.terms:
            return _F0
        return self.terms[self.leading_monomial()]

    lc = leading_coefficient

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _order_key(t[0]), reverse=True)

    def monic(self) -> "BiPoly":
        if not self.terms:
            return self
        c = self.leading_coefficient()
        if c == 1:
            return self
        return self.scale(c.inverse())

    def radicand(self) -> int:
        for c in self.terms.values():
            if c.d != 1:
                return c.d
        return 1

    def is_rational(self) -> bool:
        return all(not c.b for c in self.terms.values())

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return BiPoly._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._from_clean({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, BiPoly):
            other = BiPoly.coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return BiPoly.coerce(other) - self

    def scale(self, c) -> "BiPoly":
        c = FieldElem.coerce(c)
        if not c:
            return ZERO
        if c == 1:
            return self
        return BiPoly._from_clean({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            if isinstance(other, (int, Fraction, FieldElem)):
                return self.scale(other)
            return NotImplemented
        if not self.terms or not other.terms:
            return ZERO
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2)
                s = out.get(m)
                out[m] = c1 * c2 if s is None else s + c1 * c2
        return BiPoly._from_clean({m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a nonnegative integer")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            return self.scale(FieldElem.coerce(other).inverse())
        return RatFun(self, BiPoly.coerce(other))

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, FieldElem)):
            return self.terms == BiPoly.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- division ---------------------------------------------------------
    def try_divide(self, d: "BiPoly") -> "BiPoly | None":
        """Exact quotient self/d, or None when d does not divide self."""
        if not d.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return ZERO
        if d.deg > self.deg:
            return None
        dm = d.leading_monomial()
        dc_inv = d.terms[dm].inverse()
        di, dj = dm
        rem = dict(self.terms)
        quot = {}
        dterms = list(d.terms.items())
        while rem:
            rm = max(rem, key=_order_key)
            ri, rj = rm
            if ri < di or rj < dj:
                return None
            qm = (ri - di, rj - dj)
            qc = rem[rm] * dc_inv
            quot[qm] = qc
            for (ti, tj), tc in dterms:
                m = (ti + qm[0], tj + qm[1])
                s = rem.get(m)
                v = -(tc * qc) if s is None else s - tc * qc
                if v:
                    rem[m] = v
                else:
                    rem.pop(m, None)
        return BiPoly._from_clean(quot)

    def divide_exact(self, d: "BiPoly") -> "BiPoly":
        q = self.try_divide(BiPoly.coerce(d))
        if q is None:
            raise NotDivisible(f"{d} does not divide {self}")
        return q

    def divides(self, other: "BiPoly") -> bool:
        return other.try_divide(self) is not None

    # -- calculus and substitution ---------------------------------------
    def derivative(self, var: int) -> "BiPoly":
        out = {}
        for (i, j), c in self.terms.items():
            e = (i, j)[var]
            if e:
                m = (i - 1, j) if var == 0 else (i, j - 1)
                out[m] = c * e
        return BiPoly._from_clean(out)

    def linear_substitute(self, matrix) -> "BiPoly":
        """Evaluate at (alpha, beta) -> (alpha, beta) @ matrix.

        ``matrix`` is ((m00, m01), (m10, m11)); alpha maps to
        m00*alpha + m10*beta and beta to m01*alpha + m11*beta.
        """
        (m00, m01), (m10, m11) = matrix
        if not (m00.b or m01.b or m10.b or m11.b) and self.is_rational():
            return _rational_linear_substitute(self, m00.a, m01.a, m10.a, m11.a)
        img_a = BiPoly.linear(m00, m10)
        img_b = BiPoly.linear(m01, m11)
        return self.compose(img_a, img_b)

    def compose(self, img_a: "BiPoly", img_b: "BiPoly") -> "BiPoly":
        if not self.terms:
            return ZERO
        max_i = max(i for i, _ in self.terms)
        max_j = max(j for _, j in self.terms)
        pa = [ONE]
        for _ in range(max_i):
            pa.append(pa[-1] * img_a)
        pb = [ONE]
        for _ in range(max_j):
            pb.append(pb[-1] * img_b)
        acc: dict = {}
        for (i, j), c in self.terms.items():
            for m, v in (pa[i] * pb[j]).terms.items():
                s = acc.get(m)
                acc[m] = v * c if s is None else s + v * c
        return BiPoly._from_clean({m: c for m, c in acc.items() if c})

    def homogeneous_components(self) -> list[tuple[int, "BiPoly"]]:
        """Homogeneous parts in decreasing degree, ``[]`` for zero."""
        parts: dict = {}
        for (i, j), c in self.terms.items():
            parts.setdefault(i + j, {})[(i, j)] = c
        return [(d, BiPoly._from_clean(parts[d])) for d in sorted(parts, reverse=True)]

    def homogeneous_part(self, degree: int) -> "BiPoly":
        return BiPoly._from_clean({m: c for m, c in self.terms.items() if sum(m) == degree})

    def leading_form(self) -> "BiPoly":
        return self.homogeneous_part(self.deg)

    def is_homogeneous(self) -> bool:
        return len({i + j for i, j in self.terms}) <= 1

    def evaluate(self, x, y):
        """Value at alpha = x, beta = y (FieldElem or rational inputs)."""
        x = FieldElem.coerce(x)
        y = FieldElem.coerce(y)
        xs, ys = {}, {}
        total = _F0
        for (i, j), c in self.terms.items():
            if i not in xs:
                xs[i] = x ** i
            if j not in ys:
                ys[j] = y ** j
            total = total + c * xs[i] * ys[j]
        return total

    # -- rendering --------------------------------------------------------
    def __repr__(self):
        return f"BiPoly({self})"

    def __str__(self):
        return self.to_str()

    def to_str(self, symbols=("alpha", "beta")) -> str:
        if not self.terms:
            return "0"
        pieces = []
        single = len(self.terms) == 1
        for (i, j), c in self.sorted_terms():
            mono = _mono_str(i, j, symbols)
            neg = _is_negative(c)
            mag = -c if neg and c.is_simple() else c
            if not c.is_simple():
                neg = False
            if not mono:
                body = mag.to_str() if (single or mag.is_simple()) else f"({mag.to_str()})"
            elif mag == 1:
                body = mono
            else:
                cs = mag.to_str()
                body = f"{cs}*{mono}" if mag.is_simple() else f"({cs})*{mono}"
            pieces.append((neg, body))
        out = ("-" if pieces[0][0] else "") + pieces[0][1]
        for neg, body in pieces[1:]:
            out += (" - " if neg else " + ") + body
        return out


def _linear_powers(c0, c1, n):
    """Coefficient lists of (c0*alpha + c1*beta)^k for k <= n, indexed by the beta exponent."""
    out = [[Fraction(1)]]
    for _ in range(n):
        prev = out[-1]
        nxt = [Fraction(0)] * (len(prev) + 1)
        for j, c in enumerate(prev):
            if c:
                nxt[j] += c * c0
                nxt[j + 1] += c * c1
        out.append(nxt)
    return out


def _rational_linear_substitute(p: BiPoly, m00, m01, m10, m11) -> BiPoly:
    """linear_substitute for rational p and matrix, on plain Fractions."""
    if not p.terms:
        return ZERO
    max_i = max(i for i, _ in p.terms)
    max_j = max(j for _, j in p.terms)
    pa = _linear_powers(m00, m10, max_i)
    pb = _linear_powers(m01, m11, max_j)
    acc: dict = {}
    for (i, j), c in p.terms.items():
        c = c.a
        d = i + j
        for s, x in enumerate(pa[i]):
            if not x:
                continue
            xc = x * c
            for t, y in enumerate(pb[j]):
                if y:
                    k = s + t  # beta exponent
                    acc[k, d] = acc.get((k, d), 0) + xc * y
    raw = FieldElem._raw
    zero = Fraction(0)
    return BiPoly._from_clean({(d - k, k): raw(v, zero, 1) for (k, d), v in acc.items() if v})


def _is_negative(c: FieldElem) -> bool:
    return c.a < 0 or (not c.a and c.b < 0)


def _mono_str(i, j, symbols):
    parts = []
    for e, s in ((i, symbols[0]), (j, symbols[1])):
        if e == 1:
            parts.append(s)
        elif e > 1:
            parts.append(f"{s}^{e}")
    return "*".join(parts)


ZERO = BiPoly._from_clean({})
ONE = BiPoly._from_clean({(0, 0): _F1})
ALPHA = BiPoly._from_clean({(1, 0): _F1})
BETA = BiPoly._from_clean({(0, 1): _F1})


# -- conversion to the integer gcd core --------------------------------------

def _radicand(*polys) -> int:
    d = 1
    for p in polys:
        for c in p.terms.values():
            if c.d != 1:
                if d != 1 and c.d != d:
                    raise FieldMismatch(f"radicands {d} and {c.d} differ")
                d = c.d
    return d


def _to_rec(p: BiPoly):
    """alpha-major list of beta-coefficient lists of integer pairs (p up to a scalar)."""
    keys = list(p.terms)
    pairs = _zgcd.to_pairs([(c.a, c.b) for c in p.terms.values()])
    rec = [[] for _ in range(p.degree_in(0) + 1)]
    for (i, j), pr in zip(keys, pairs):
        row = rec[i]
        if len(row) <= j:
            row.extend([(0, 0)] * (j + 1 - len(row)))
        row[j] = pr
    return rec


def _from_rec(rec, d: int) -> BiPoly:
    out = {}
    for i, row in enumerate(rec):
        for j, (x, y) in enumerate(row):
            if x or y:
                out[(i, j)] = FieldElem._raw(Fraction(x), Fraction(y), d)
    return BiPoly._from_clean(out)


def gcd(p: BiPoly, q: BiPoly) -> BiPoly:
    """Monic greatest common divisor of two bivariate polynomials."""
    p = BiPoly.coerce(p)
    q = BiPoly.coerce(q)
    if not p and not q:
        raise ArithmeticError("gcd(0, 0) is undefined")
    if not p:
        return q.monic()
    if not q:
        return p.monic()
    if p.is_constant() or q.is_constant():
        return ONE
    # cheap exits for common shapes
    if len(q.terms) == 1 or len(p.terms) == 1:
        return _gcd_with_monomial(p, q)
    if _excludes_factors_in(p, q, 0) and _excludes_factors_in(p, q, 1):
        return ONE
    d = _radicand(p, q)
    g = _zgcd.Ring(d).gcd(_to_rec(p), _to_rec(q))
    return _from_rec(g, d).monic()


def _gcd_with_monomial(p: BiPoly, q: BiPoly) -> BiPoly:
    if len(q.terms) != 1:
        p, q = q, p
    (qi, qj), = q.terms
    i = min(qi, min(m[0] for m in p.terms))
    j = min(qj, min(m[1] for m in p.terms))
    return BiPoly._from_clean({(i, j): _F1})


def lcm(p: BiPoly, q: BiPoly) -> BiPoly:
    if not p or not q:
        return ZERO
    return (p * q.divide_exact(gcd(p, q))).monic()


def squarefree_part(p: BiPoly) -> BiPoly:
    """Product of the distinct irreducible factors of p, made monic."""
    if not p:
        raise ValueError("squarefree part of zero")
    if p.is_constant():
        return ONE
    g = gcd(p, p.derivative(0))
    g = gcd(g, p.derivative(1))
    return p.divide_exact(g).monic()


# primes = 3 mod 4, so square roots are a single modular power
_MOD_PRIMES = (2**61 - 1, 2**31 - 1, 10**9 + 7, 2**89 - 1, 2**127 - 1)


def _mod_sqrt(d: int, prime: int):
    r = pow(d % prime, (prime + 1) // 4, prime)
    return r if r * r % prime == d % prime else None


def _mod_image(c: FieldElem, prime: int, root: int):
    """Image of c under Q(sqrt(D)) -> F_prime, sqrt(D) -> root; None if a denominator vanishes."""
    a, b = c.a, c.b
    if a.denominator % prime == 0 or b.denominator % prime == 0:
        return None
    val = a.numerator * pow(a.denominator, -1, prime)
    if b:
        val += b.numerator * pow(b.denominator, -1, prime) * root
    return val % prime


def _mod_specialize(p: BiPoly, var: int, value: int, prime: int, root: int):
    keep = 1 - var
    out = [0] * (p.degree_in(keep) + 1)
    for m, c in p.terms.items():
        img = _mod_image(c, prime, root)
        if img is None:
            return None
        out[m[keep]] = (out[m[keep]] + img * pow(value, m[var], prime)) % prime
    while out and not out[-1]:
        out.pop()
    return out


def _mod_gcd_degree(p, q, prime):
    while q:
        inv = pow(q[-1], -1, prime)
        r = list(p)
        while len(r) >= len(q):
            f = r[-1] * inv % prime
            shift = len(r) - len(q)
            for k, c in enumerate(q):
                r[shift + k] = (r[shift + k] - f * c) % prime
            while r and not r[-1]:
                r.pop()
        p, q = q, r
    return len(p) - 1


def _excludes_factors_in(p: BiPoly, q: BiPoly, var: int, tries: int = 4) -> bool:
    """True when p and q provably share no factor of positive degree in ``var``.

    The other variable is fixed at an integer and coefficients are mapped to
    a prime field (sqrt(D) to a square root of D there).  If the leading
    coefficient of p in ``var`` survives both steps, any common factor of
    positive degree in ``var`` survives as a common factor of the univariate
    images, so a trivial image gcd is a proof.  A nontrivial image gcd may be
    an accident of the chosen point, so a few points are tried.
    """
    if p.degree_in(var) <= 0 or q.degree_in(var) <= 0:
        return True
    other = 1 - var
    n = p.degree_in(var)
    d = p.radicand() if p.radicand() != 1 else q.radicand()
    top = BiPoly._from_clean({m: c for m, c in p.terms.items() if m[var] == n})
    attempts = 0
    for prime in _MOD_PRIMES:
        root = _mod_sqrt(d, prime) if d != 1 else 0
        if root is None:
            continue
        for value in (1000003, 3, 7919, 11):
            lead = _mod_specialize(top, other, value, prime, root)
            if not lead:
                continue
            pi = _mod_specialize(p, other, value, prime, root)
            qi = _mod_specialize(q, other, value, prime, root)
            if pi is None or qi is None or len(pi) != n + 1:
                continue
            if _mod_gcd_degree(pi, qi, prime) <= 0:
                return True
            attempts += 1
            if attempts >= tries:
                return False
    return False


def has_common_factor(p: BiPoly, q: BiPoly) -> bool:
    """Whether deg gcd(p, q) > 0, with a cheap exact pre-check."""
    if p.is_constant() or q.is_constant():
        return False
    if _excludes_factors_in(p, q, 0) and _excludes_factors_in(p, q, 1):
        return False
    return gcd(p, q).deg > 0


class RatFun:
    """Reduced fraction num/den with den monic; zero is 0/1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        num = BiPoly.coerce(num)
        den = ONE if den is None else BiPoly.coerce(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if not num:
                den = ONE
            elif den.is_constant():
                num = num.scale(den.constant_value().inverse())
                den = ONE
            else:
                g = gcd(num, den)
                if g.deg > 0:
                    num = num.divide_exact(g)
                    den = den.divide_exact(g)
                lc = den.leading_coefficient()
                if lc != 1:
                    inv = lc.inverse()
                    num = num.scale(inv)
                    den = den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, x) -> "RatFun":
        if isinstance(x, RatFun):
            return x
        return cls(BiPoly.coerce(x), ONE, _reduced=True)

    def __bool__(self):
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return self.den == ONE

    def is_constant(self) -> bool:
        return self.den == ONE and self.num.is_constant()

    def __eq__(self, other):
        if isinstance(other, RatFun):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (BiPoly, int, Fraction, FieldElem)):
            return self == RatFun.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = RatFun.coerce(other)
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-RatFun.coerce(other))

    def __rsub__(self, other):
        return RatFun.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            return RatFun(self.num.scale(other), self.den, _reduced=True) if other else RatFun(ZERO)
        other = RatFun.coerce(other)
        if not self.num or not other.num:
            return RatFun(ZERO)
        # both factors are reduced, so cross-cancelling is enough
        g1 = gcd(self.num, other.den)
        g2 = gcd(other.num, self.den)
        num = self.num.divide_exact(g1) * other.num.divide_exact(g2)
        den = self.den.divide_exact(g2) * other.den.divide_exact(g1)
        lc = den.leading_coefficient()
        if lc != 1:
            inv = lc.inverse()
            num, den = num.scale(inv), den.scale(inv)
        return RatFun(num, den, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFun(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            return self * FieldElem.coerce(other).inverse()
        return self * RatFun.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RatFun.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFun(self.num ** n, self.den ** n, _reduced=True)

    def map(self, fn) -> "RatFun":
        """Apply a ring map (e.g. a substitution) to numerator and denominator."""
        return RatFun(fn(self.num), fn(self.den))

    def evaluate(self, x, y):
        d = self.den.evaluate(x, y)
        if not d:
            raise ZeroDivisionError("denominator vanishes")
        return self.num.evaluate(x, y) / d

    def radicand(self) -> int:
        return self.num.radicand() if self.num.radicand() != 1 else self.den.radicand()

    def __repr__(self):
        return f"RatFun({self})"

    def __str__(self):
        return self.to_str()

    def to_str(self, symbols=("alpha", "beta")) -> str:
        if self.den == ONE:
            return self.num.to_str(symbols)
        num, den = _integral_display(self.num, self.den)
        ns = num.to_str(symbols)
        ds = den.to_str(symbols)
        if len(num.terms) > 1 or not num.sorted_terms()[0][1].is_simple():
            ns = f"({ns})"
        if len(den.terms) > 1 or not _is_bare_power(den):
            ds = f"({ds})"
        return f"{ns}/{ds}"


def _integral_display(num: BiPoly, den: BiPoly):
    """Rescale a fraction with rational coefficients to integer ones for printing."""
    coeffs = list(num.terms.values()) + list(den.terms.values())
    if any(c.b for c in coeffs):
        return num, den
    mult = 1
    for c in coeffs:
        mult = mult * c.a.denominator // math.gcd(mult, c.a.denominator)
    content = 0
    for c in coeffs:
        content = math.gcd(content, (c.a * mult).numerator)
    scale = Fraction(mult, content)
    if den.leading_coefficient().a < 0:
        scale = -scale
    return num.scale(scale), den.scale(scale)


def _is_bare_power(p: BiPoly) -> bool:
    """Single monomial with coefficient 1 in one variable: prints without '*'."""
    if len(p.terms) != 1:
        return False
    (i, j), c = next(iter(p.terms.items()))
    return c == 1 and (i == 0 or j == 0)

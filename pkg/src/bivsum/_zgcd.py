"""Fraction-free gcd core over Z[sqrt(D)].

Coefficients are pairs (x, y) standing for x + y*sqrt(D).  Polynomials in
beta are lists of pairs (low degree first); bivariate polynomials are
alpha-major lists of those.  Every result is only defined up to a nonzero
scalar of Q(sqrt(D)), which is all a gcd needs; scalars are kept small by
turning leading coefficients into rational integers and dividing out the
integer content.
"""

from __future__ import annotations

import math

_Z = (0, 0)
_ONE = (1, 0)


class Ring:
    __slots__ = ("d",)

    def __init__(self, d: int):
        self.d = d

    def mul(self, s, t):
        return (s[0] * t[0] + self.d * s[1] * t[1], s[0] * t[1] + s[1] * t[0])

    # -- univariate in beta -------------------------------------------------
    def umul(self, p, q):
        if not p or not q:
            return []
        out = [[0, 0] for _ in range(len(p) + len(q) - 1)]
        d = self.d
        for i, (a0, a1) in enumerate(p):
            if not a0 and not a1:
                continue
            for j, (b0, b1) in enumerate(q):
                o = out[i + j]
                o[0] += a0 * b0 + d * a1 * b1
                o[1] += a0 * b1 + a1 * b0
        return _strip([(x, y) for x, y in out])

    def uscale(self, c, p):
        if c == _ONE:
            return p
        return [self.mul(c, x) for x in p]

    def usub(self, p, q):
        n = max(len(p), len(q))
        out = []
        for i in range(n):
            a = p[i] if i < len(p) else _Z
            b = q[i] if i < len(q) else _Z
            out.append((a[0] - b[0], a[1] - b[1]))
        return _strip(out)

    def unormal(self, p):
        """p times a scalar: rational integer leading coefficient, no integer content."""
        if not p:
            return p
        x, y = p[-1]
        if y:
            p = self.uscale((x, -y), p)
        g = 0
        for a, b in p:
            g = math.gcd(g, a, b)
            if g == 1:
                break
        if p[-1][0] < 0:
            g = -g
        return p if g == 1 else [(a // g, b // g) for a, b in p]

    def uprem(self, a, b):
        r = list(a)
        lb = b[-1]
        db = len(b) - 1
        while r and len(r) - 1 >= db:
            lr = r[-1]
            shift = len(r) - 1 - db
            r = self.uscale(lb, r)
            sub = [_Z] * shift + self.uscale(lr, b)
            r = self.usub(r, sub)
        return r

    def ugcd(self, a, b):
        a, b = self.unormal(a), self.unormal(b)
        if len(a) < len(b):
            a, b = b, a
        while b:
            a, b = b, self.unormal(self.uprem(a, b))
        return a

    def uquo(self, a, c, k):
        """a * n**k / c for c with rational integer leading coefficient n.

        Exact whenever k >= len(a) - deg c and c divides a.
        """
        n = c[-1][0]
        dc = len(c) - 1
        m = n ** k
        r = [(x * m, y * m) for x, y in a]
        quot = [_Z] * (len(a) - dc)
        while r and len(r) - 1 >= dc:
            x, y = r[-1]
            if x % n or y % n:
                raise ArithmeticError("inexact division in gcd core")
            shift = len(r) - 1 - dc
            q = (x // n, y // n)
            quot[shift] = q
            r = self.usub(r, [_Z] * shift + self.uscale(q, c))
        if r:
            raise ArithmeticError("inexact division in gcd core")
        return _strip(quot)

    # -- bivariate, alpha-major ---------------------------------------------
    def content(self, rec):
        g = []
        for row in rec:
            if row:
                g = self.ugcd(g, row) if g else self.unormal(row)
                if len(g) == 1:
                    return [_ONE]
        return g

    def primitive(self, rec):
        """rec divided by its beta-content, up to a scalar kept small."""
        c = self.content(rec)
        if len(c) > 1:
            k = max(len(r) for r in rec) - len(c) + 1
            rec = [self.uquo(r, c, k) if r else [] for r in rec]
        x, y = rec[-1][-1]
        if y:
            rec = [self.uscale((x, -y), r) for r in rec]
        g = 0
        for row in rec:
            for a, b in row:
                g = math.gcd(g, a, b)
        if rec[-1][-1][0] < 0:
            g = -g
        return rec if g == 1 else [[(a // g, b // g) for a, b in r] for r in rec]

    def prem(self, a, b):
        """Lazy pseudo-remainder of a by b in alpha."""
        r = [list(x) for x in a]
        db = len(b) - 1
        lb = b[-1]
        while r and len(r) - 1 >= db:
            lr = r[-1]
            shift = len(r) - 1 - db
            new = [self.umul(lb, x) for x in r]
            for k, bk in enumerate(b):
                if bk:
                    new[shift + k] = self.usub(new[shift + k], self.umul(lr, bk))
            new.pop()
            while new and not new[-1]:
                new.pop()
            r = new
        return r

    def gcd(self, a, b):
        """gcd of two nonzero bivariate recs, up to a scalar."""
        ca, cb = self.content(a), self.content(b)
        content = self.ugcd(ca, cb)
        a, b = self.primitive(a), self.primitive(b)
        if len(a) < len(b):
            a, b = b, a
        while True:
            if len(b) == 1:
                g = [[_ONE]]
                break
            r = self.prem(a, b)
            if not r:
                g = b
                break
            a, b = b, self.primitive(r)
        if len(content) > 1:
            g = [self.umul(content, row) for row in g]
        return g


def _strip(p):
    while p and not p[-1][0] and not p[-1][1]:
        p.pop()
    return p


def to_pairs(coeffs):
    """Integer pairs for a common multiple of the (a, b) Fraction pairs."""
    den = 1
    for a, b in coeffs:
        den = math.lcm(den, a.denominator, b.denominator)
    return [((a * den).numerator, (b * den).numerator) for a, b in coeffs]

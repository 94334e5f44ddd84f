"""Plain-text summation identities read off a*sigma(g) + b*g = f.

With a = 1, b = -1 the equation telescopes to
    sum_{n=n0}^{k} f_n = g_{k+1} - g_{n0},
and with a = b = 1, multiplying by (-1)^n, to
    sum_{n=n0}^{k} (-1)^n f_n = (-1)^k g_{k+1} + (-1)^n0 g_{n0},
where h_n stands for h(S_n, S_{n+1}).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import NotRenderable
from ..exactnum import FieldElem
from .sequences import SequenceSpec, sequence_values
from .verify import Identity

__all__ = ["RenderedSum", "first_defined_index", "render_sum_identity", "equation_text"]


def equation_text(ident: Identity) -> str:
    return f"({ident.a})*sigma(g) + ({ident.b})*g = {ident.f}   with g = {ident.g}"


def first_defined_index(ident: Identity, spec: SequenceSpec, horizon: int = 60) -> int:
    """Smallest n0 such that f and g are defined at every index n0..horizon."""
    vals = sequence_values(spec, horizon + 1)
    n0 = 0
    for n in range(horizon + 1):
        for fn in (ident.f, ident.g):
            if not fn.den.evaluate(vals[n], vals[n + 1]):
                n0 = n + 1
                break
    if n0 > horizon - 2:
        raise NotRenderable("no index range on which all terms are defined")
    return n0


def _const_tail(c: FieldElem) -> str:
    if not c:
        return ""
    if c.is_simple():
        s = str(c)
        return f" - {s[1:]}" if s.startswith("-") else f" + {s}"
    return f" + ({c})"


@dataclass
class RenderedSum:
    ident: Identity
    spec: SequenceSpec
    n0: int
    alternating: bool
    text: str

    def _values(self, k):
        return sequence_values(self.spec, k + 2)

    def lhs(self, k: int) -> FieldElem:
        """The sum itself, term by term."""
        vals = self._values(k)
        total = FieldElem(0)
        for n in range(self.n0, k + 1):
            term = self.ident.f.evaluate(vals[n], vals[n + 1])
            total = total + (-term if self.alternating and n % 2 else term)
        return total

    def rhs(self, k: int) -> FieldElem:
        """The closed form."""
        vals = self._values(k)
        g = self.ident.g
        top = g.evaluate(vals[k + 1], vals[k + 2])
        low = g.evaluate(vals[self.n0], vals[self.n0 + 1])
        if not self.alternating:
            return top - low
        sk = -1 if k % 2 else 1
        s0 = -1 if self.n0 % 2 else 1
        return top * sk + low * s0

    def evaluate(self, k: int):
        return self.lhs(k), self.rhs(k)


def render_sum_identity(ident: Identity, spec: SequenceSpec) -> RenderedSum:
    a, b = ident.a, ident.b
    if a == 1 and b == -1:
        alternating = False
    elif a == 1 and b == 1:
        alternating = True
    else:
        raise NotRenderable(f"no telescoping sum for a = {a}, b = {b}; {equation_text(ident)}")
    n0 = first_defined_index(ident, spec)
    x = spec.symbol
    f_text = ident.f.to_str((f"{x}_n", f"{x}_{{n+1}}"))
    g_text = ident.g.to_str((f"{x}_{{k+1}}", f"{x}_{{k+2}}"))
    vals = sequence_values(spec, n0 + 1)
    low = ident.g.evaluate(vals[n0], vals[n0 + 1])
    if not alternating:
        text = f"sum({f_text}, n={n0}..k) = {g_text}{_const_tail(-low)}"
    else:
        c = low if n0 % 2 == 0 else -low
        text = f"sum((-1)^n*({f_text}), n={n0}..k) = (-1)^k*({g_text}){_const_tail(c)}"
    return RenderedSum(ident, spec, n0, alternating, text)

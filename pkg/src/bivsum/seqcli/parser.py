"""Parser for rational expressions in alpha and beta.

Grammar (usual precedence, ``^`` binds tightest and takes a nonnegative
integer literal)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | 'alpha' | 'beta' | 'sqrt' '(' ['-'] INT ')' | '(' expr ')'

The output of ``RatFun.to_str`` is always accepted, so printing and parsing
round-trip.
"""

from __future__ import annotations

import re

from ..bipoly import ALPHA, BETA, BiPoly, RatFun
from ..errors import ExprSyntaxError, RadicandMismatch
from ..exactnum import FieldElem, normalize_radicand

__all__ = ["parse_expr", "tokenize"]

_TOKEN = re.compile(r"\s*(?:(\d+)|(alpha|beta|sqrt)\b|([-+*/^()−]))")


def tokenize(text: str):
    """List of (kind, value, position) with kind in {'int', 'name', 'op', 'end'}."""
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            tokens.append(("op", "-" if op == "−" else op, start))
        pos = m.end()
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str, radicand: int | None):
        self.tokens = tokenize(text)
        self.i = 0
        self.radicand = radicand

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[0] != "op" or tok[1] != value:
            raise ExprSyntaxError(f"expected {value!r}", tok[2])
        return tok

    def parse(self) -> RatFun:
        if self.peek()[0] == "end":
            raise ExprSyntaxError("empty expression", 0)
        val = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExprSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return val

    def expr(self):
        val = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            _, op, pos = self.take()
            rhs = self.unary()
            if op == "*":
                val = val * rhs
            else:
                if not rhs:
                    raise ExprSyntaxError("division by zero", pos)
                val = val / rhs
        return val

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            val = self.unary()
            return -val if tok[1] == "-" else val
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                raise ExprSyntaxError("exponent must be a nonnegative integer literal", tok[2])
            if not base and tok[1] == 0:
                raise ExprSyntaxError("0^0 is undefined", tok[2])
            base = base ** tok[1]
        return base

    def atom(self):
        kind, value, pos = self.take()
        if kind == "int":
            return RatFun(BiPoly.const(value))
        if kind == "name":
            if value == "alpha":
                return RatFun(ALPHA)
            if value == "beta":
                return RatFun(BETA)
            return self.sqrt(pos)
        if kind == "op" and value == "(":
            val = self.expr()
            self.expect(")")
            return val
        if kind == "end":
            raise ExprSyntaxError("unexpected end of expression", pos)
        raise ExprSyntaxError(f"unexpected {value!r}", pos)

    def sqrt(self, pos):
        self.expect("(")
        sign = 1
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.take()
            sign = -1
        kind, value, vpos = self.take()
        if kind != "int":
            raise ExprSyntaxError("sqrt takes an integer literal", vpos)
        self.expect(")")
        if value == 0:
            return RatFun(0)
        d, _ = normalize_radicand(sign * value)
        if d != 1 and self.radicand is not None and d != self.radicand:
            raise RadicandMismatch(
                f"sqrt({sign * value}) lies outside Q(sqrt({self.radicand})) (position {pos})"
            )
        return RatFun(BiPoly.const(FieldElem.sqrt(sign * value)))


def parse_expr(text: str, radicand: int | None = None) -> RatFun:
    """Parse ``text`` into a reduced rational function.

    ``radicand`` is the squarefree D of the working field; any ``sqrt(N)``
    whose squarefree part differs from it raises RadicandMismatch.
    """
    return _Parser(text, radicand).parse()

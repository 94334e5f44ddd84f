"""Exact rationals and the quadratic field Q(sqrt(D)).

Rationals are plain :class:`fractions.Fraction` values (aliased ``Rat``).
:class:`FieldElem` is ``a + b*sqrt(D)`` with rational ``a, b`` and a
squarefree integer ``D``.  Elements with ``b == 0`` are always stored with
``D == 1`` so that equality is structural; such rational elements combine
freely with elements of any radicand.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from numbers import Rational

from .errors import DegenerateDiscriminant, FieldMismatch

Rat = Fraction

__all__ = ["Rat", "FieldElem", "normalize_radicand", "as_fraction"]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, FieldElem):
        if x.b:
            raise ValueError(f"{x} is not rational")
        return x.a
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def _square_split(n: int) -> tuple[int, int]:
    """Return (core, root) with n == core * root**2 and core squarefree, n > 0."""
    core, root = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        root *= p ** (e // 2)
        if e % 2:
            core *= p
        p += 1 if p == 2 else 2
    return core * n, root


def normalize_radicand(d_raw) -> tuple[int, Fraction]:
    """Write sqrt(d_raw) as scale * sqrt(D) with D squarefree.

    ``d_raw`` may be an integer or a rational; ``scale**2 * D == d_raw``.
    D == 1 exactly when d_raw is the square of a rational.

    >>> normalize_radicand(8)
    (2, Fraction(2, 1))
    """
    q = as_fraction(d_raw)
    if q == 0:
        raise DegenerateDiscriminant("radicand is zero")
    sign = -1 if q < 0 else 1
    n = abs(q.numerator) * q.denominator
    core, root = _square_split(n)
    return sign * core, Fraction(root, q.denominator)


class FieldElem:
    """Immutable element ``a + b*sqrt(d)`` of Q(sqrt(d))."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=1):
        a = as_fraction(a)
        b = as_fraction(b)
        if b and d != 1:
            d, scale = normalize_radicand(d)
            b *= scale
        if not b or d == 1:
            a += b
            b = Fraction(0)
            d = 1
        self.a = a
        self.b = b
        self.d = d

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, d: int) -> "FieldElem":
        obj = object.__new__(cls)
        if not b:
            obj.a, obj.b, obj.d = a, b, 1
        else:
            obj.a, obj.b, obj.d = a, b, d
        return obj

    @classmethod
    def sqrt(cls, d_raw) -> "FieldElem":
        """Exact square root of a rational, as a field element."""
        d, scale = normalize_radicand(d_raw)
        if d == 1:
            return cls._raw(scale, Fraction(0), 1)
        return cls._raw(Fraction(0), scale, d)

    @classmethod
    def coerce(cls, x) -> "FieldElem":
        if isinstance(x, FieldElem):
            return x
        return cls._raw(as_fraction(x), Fraction(0), 1)

    # -- accessors --------------------------------------------------------
    @property
    def rational_part(self) -> Fraction:
        return self.a

    @property
    def radical_part(self) -> Fraction:
        return self.b

    @property
    def radicand(self) -> int:
        return self.d

    def is_rational(self) -> bool:
        return not self.b

    def to_fraction(self) -> Fraction:
        if self.b:
            raise ValueError(f"{self} is not rational")
        return self.a

    # -- arithmetic -------------------------------------------------------
    def _common_d(self, other: "FieldElem") -> int:
        if self.d == other.d or other.d == 1:
            return self.d
        if self.d == 1:
            return other.d
        raise FieldMismatch(f"radicands {self.d} and {other.d} differ")

    def __add__(self, other):
        if not isinstance(other, FieldElem):
            if isinstance(other, (int, Fraction)):
                return FieldElem._raw(self.a + other, self.b, self.d)
            return NotImplemented
        d = self._common_d(other)
        return FieldElem._raw(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem._raw(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, FieldElem):
            if isinstance(other, (int, Fraction)):
                return FieldElem._raw(self.a - other, self.b, self.d)
            return NotImplemented
        d = self._common_d(other)
        return FieldElem._raw(self.a - other.a, self.b - other.b, d)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if not isinstance(other, FieldElem):
            if isinstance(other, (int, Fraction)):
                return FieldElem._raw(self.a * other, self.b * other, self.d)
            return NotImplemented
        if not other.b:
            return FieldElem._raw(self.a * other.a, self.b * other.a, self.d)
        if not self.b:
            return FieldElem._raw(self.a * other.a, self.a * other.b, other.d)
        d = self._common_d(other)
        return FieldElem._raw(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "FieldElem":
        return FieldElem._raw(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def inverse(self) -> "FieldElem":
        if not self.b:
            if not self.a:
                raise ZeroDivisionError("inverse of zero field element")
            return FieldElem._raw(1 / self.a, self.b, 1)
        n = self.norm()
        # n != 0 since d is squarefree and != 1
        return FieldElem._raw(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if not isinstance(other, FieldElem):
            if isinstance(other, (int, Fraction)):
                if not other:
                    raise ZeroDivisionError("division by zero")
                return FieldElem._raw(self.a / other, self.b / other, self.d)
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return FieldElem.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = FieldElem._raw(Fraction(1), Fraction(0), 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison -------------------------------------------------------
    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, (int, Fraction)):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    # -- rendering --------------------------------------------------------
    def __repr__(self):
        return f"FieldElem({self})"

    def __str__(self):
        return self.to_str()

    def to_str(self, spaced=True) -> str:
        a, b = self.a, self.b
        if not b:
            return _rat_str(a)
        sep_plus, sep_minus = (" + ", " - ") if spaced else ("+", "-")
        root = f"sqrt({self.d})"
        mag = abs(b)
        rad = root if mag == 1 else f"{_rat_str(mag)}*{root}"
        if not a:
            return f"-{rad}" if b < 0 else rad
        return _rat_str(a) + (sep_minus if b < 0 else sep_plus) + rad

    def is_simple(self) -> bool:
        """True when the printed form is a single signed factor (no + or -)."""
        return not (self.a and self.b)

    def approx(self, digits: int) -> str:
        """Decimal approximation with ``digits`` significant digits."""
        with localcontext() as ctx:
            ctx.prec = digits + 10
            a = Decimal(self.a.numerator) / Decimal(self.a.denominator)
            b = Decimal(self.b.numerator) / Decimal(self.b.denominator)
            if not self.b:
                return f"{a:.{digits}g}"
            r = Decimal(abs(self.d)).sqrt() * b
            if self.d > 0:
                return f"{a + r:.{digits}g}"
            return f"{a:.{digits}g}{'+' if r >= 0 else '-'}{abs(r):.{digits}g}i"


def _rat_str(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


ONE = FieldElem(1)
ZERO = FieldElem(0)

"""Second-order linear recurrences S_{n+2} = v*S_{n+1} + u*S_n.

Sequence values stand in for the generators: alpha is read as S_n and beta
as S_{n+1}, so sigma moves every index up by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..exactnum import as_fraction

__all__ = ["SequenceSpec", "PRESETS", "preset", "lucas_u", "lucas_v", "sequence_values"]


@dataclass(frozen=True)
class SequenceSpec:
    u: Fraction
    v: Fraction
    s0: Fraction
    s1: Fraction
    name: str | None = None
    symbol: str = "S"

    def __post_init__(self):
        for attr in ("u", "v", "s0", "s1"):
            object.__setattr__(self, attr, as_fraction(getattr(self, attr)))

    def with_initial(self, s0=None, s1=None) -> "SequenceSpec":
        return SequenceSpec(self.u, self.v,
                            self.s0 if s0 is None else s0,
                            self.s1 if s1 is None else s1,
                            self.name, self.symbol)


PRESETS = {
    "fibonacci": SequenceSpec(1, 1, 1, 1, "fibonacci", "F"),
    "lucas": SequenceSpec(1, 1, 2, 1, "lucas", "L"),
    "pell": SequenceSpec(1, 2, 0, 1, "pell", "P"),
    "pell-lucas": SequenceSpec(1, 2, 2, 2, "pell-lucas", "Q"),
}


def preset(name: str) -> SequenceSpec:
    try:
        return PRESETS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown sequence {name!r}; choose from {', '.join(PRESETS)}") from None


def lucas_u(p, q) -> SequenceSpec:
    """U_n(P, Q): a_{n+2} = P*a_{n+1} - Q*a_n with U_0 = 0, U_1 = 1."""
    return SequenceSpec(-as_fraction(q), p, 0, 1, f"lucasU({p},{q})", "U")


def lucas_v(p, q) -> SequenceSpec:
    """V_n(P, Q): same recurrence with V_0 = 2, V_1 = P."""
    return SequenceSpec(-as_fraction(q), p, 2, p, f"lucasV({p},{q})", "V")


def sequence_values(spec: SequenceSpec, n_max: int) -> list:
    """Exact S_0..S_{n_max}; plain ints whenever everything is integral."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    vals = [spec.s0, spec.s1]
    while len(vals) < n_max + 1:
        vals.append(spec.v * vals[-1] + spec.u * vals[-2])
    vals = vals[: n_max + 1]
    if all(x.denominator == 1 for x in vals):
        return [int(x) for x in vals]
    return vals

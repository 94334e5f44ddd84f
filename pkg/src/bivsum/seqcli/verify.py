"""Symbolic and pointwise checks of a*sigma(g) + b*g = f."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..bipoly import RatFun
from ..difffield import DiffField
from ..errors import MismatchedField
from ..exactnum import FieldElem
from .sequences import SequenceSpec, sequence_values

__all__ = ["Identity", "VerificationReport", "residual", "verify_pointwise"]


def residual(field: DiffField, a, b, f, g) -> RatFun:
    a, b, f, g = (RatFun.coerce(x) for x in (a, b, f, g))
    return a * field.sigma(g) + b * g - f


@dataclass
class Identity:
    """A solved equation a*sigma(g) + b*g = f, rechecked on construction."""

    field: DiffField
    a: RatFun
    b: RatFun
    f: RatFun
    g: RatFun
    report: object = None
    warnings: list = dc_field(default_factory=list)

    def __post_init__(self):
        self.a, self.b, self.f, self.g = (RatFun.coerce(x) for x in (self.a, self.b, self.f, self.g))
        if residual(self.field, self.a, self.b, self.f, self.g):
            raise ValueError(f"g = {self.g} does not satisfy the equation")


@dataclass
class VerificationReport:
    checked: int = 0
    passed: int = 0
    skipped: list = dc_field(default_factory=list)  # (n, reason)
    failure: dict | None = None  # first failing index with both sides

    @property
    def ok(self) -> bool:
        return self.failure is None and self.passed == self.checked

    def to_dict(self):
        return {
            "checked": self.checked,
            "passed": self.passed,
            "skipped": [{"n": n, "reason": r} for n, r in self.skipped],
            "failure": self.failure,
        }


def _value_str(x) -> str:
    return str(FieldElem.coerce(x))


def verify_pointwise(field: DiffField, a, b, f, g, spec: SequenceSpec, n_range) -> VerificationReport:
    """Check a(x_n)*g(x_{n+1}) + b(x_n)*g(x_n) = f(x_n) with x_n = (S_n, S_{n+1}).

    Indices where some denominator vanishes are skipped and listed.  The
    check does not stop at the first failure, but only that one is kept.
    """
    if field.u != spec.u or field.v != spec.v:
        raise MismatchedField(
            f"sequence has (u, v) = ({spec.u}, {spec.v}) but the field has ({field.u}, {field.v})"
        )
    a, b, f, g = (RatFun.coerce(x) for x in (a, b, f, g))
    n_range = list(n_range)
    if not n_range:
        return VerificationReport()
    vals = sequence_values(spec, max(n_range) + 2)
    rep = VerificationReport()
    for n in n_range:
        x0, x1, x2 = vals[n], vals[n + 1], vals[n + 2]
        parts = {}
        reason = None
        for label, fn, pt in (("a", a, (x0, x1)), ("b", b, (x0, x1)), ("f", f, (x0, x1)),
                              ("g at n", g, (x0, x1)), ("g at n+1", g, (x1, x2))):
            try:
                parts[label] = fn.evaluate(*pt)
            except ZeroDivisionError:
                reason = f"denominator of {label} vanishes at (S_{n}, S_{n+1}) = ({x0}, {x1})" \
                    if label != "g at n+1" else \
                    f"denominator of g vanishes at (S_{n + 1}, S_{n + 2}) = ({x1}, {x2})"
                break
        if reason:
            rep.skipped.append((n, reason))
            continue
        rep.checked += 1
        lhs = parts["a"] * parts["g at n+1"] + parts["b"] * parts["g at n"]
        rhs = parts["f"]
        if lhs == rhs:
            rep.passed += 1
        elif rep.failure is None:
            rep.failure = {"n": n, "lhs": _value_str(lhs), "rhs": _value_str(rhs)}
    return rep

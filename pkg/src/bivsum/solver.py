"""One entry point for both coefficient cases."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .bipoly import RatFun
from .difffield import DiffField
from .errors import ZeroCoefficient
from .gosper import GosperReport, run_trivial
from .polysolve import SearchLimits
from .undenom import DenomReport, clear_to_polynomial, run_nontrivial

__all__ = ["Outcome", "solve_equation"]

MODES = ("auto", "trivial", "nontrivial")


@dataclass
class Outcome:
    mode: str
    solution: RatFun | None
    report: GosperReport | DenomReport
    warnings: list = dc_field(default_factory=list)
    limits_hit: bool = False

    @property
    def found(self) -> bool:
        return self.solution is not None


def solve_equation(field: DiffField, a, b, f, mode: str = "auto",
                   limits: SearchLimits = SearchLimits()) -> Outcome:
    """Solve a*sigma(g) + b*g = f.

    ``auto`` picks the constant-coefficient solver when a and b are field
    constants and the polynomial one otherwise.  Rational inputs to the
    polynomial solver are cleared of denominators first.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    a, b, f = RatFun.coerce(a), RatFun.coerce(b), RatFun.coerce(f)
    if not a or not b:
        raise ZeroCoefficient("coefficients a and b must be nonzero")
    constant = a.is_constant() and b.is_constant()
    if mode == "trivial" and not constant:
        raise ValueError("trivial mode needs constant coefficients a and b")
    if mode == "trivial" or (mode == "auto" and constant):
        rep = run_trivial(a.num.constant_value(), b.num.constant_value(), f, field, limits)
        used = "trivial"
    else:
        pa, pb, pf = clear_to_polynomial(a, b, f)
        rep = run_nontrivial(pa, pb, pf, field, limits)
        used = "nontrivial"
    return Outcome(used, rep.solution, rep, list(rep.warnings), rep.limits_hit)

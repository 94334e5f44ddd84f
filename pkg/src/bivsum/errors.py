"""Exception hierarchy shared by all modules."""


class BivsumError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatch(BivsumError, ValueError):
    """Two quadratic field elements with different radicands were combined."""


class DegenerateDiscriminant(BivsumError, ValueError):
    """A zero radicand was requested (repeated eigenvalue upstream)."""


class NotDivisible(BivsumError, ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class DegeneracyError(BivsumError, ValueError):
    """The parameters (u, v) do not define an admissible difference field."""


class ZeroParameter(DegeneracyError):
    pass


class RepeatedEigenvalue(DegeneracyError):
    pass


class RatioRootOfUnity(DegeneracyError):
    pass


class UnitEigenvalue(DegeneracyError):
    pass


class ZeroInput(BivsumError, ValueError):
    pass


class ZeroCoefficient(BivsumError, ValueError):
    pass


class MismatchedField(BivsumError, ValueError):
    """A sequence and a difference field disagree on (u, v)."""


class ExprSyntaxError(BivsumError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class RadicandMismatch(BivsumError, ValueError):
    pass


class NotFound(BivsumError):
    """No solution was found.

    ``limits_hit`` is True when some search bound (trial degree, candidate
    denominator range) was exhausted, so absence is not proven.  Solvers
    attach their search record as ``report``.
    """

    def __init__(self, message="no solution found", limits_hit=True, report=None):
        super().__init__(message)
        self.limits_hit = limits_hit
        self.report = report


class NotRenderable(BivsumError):
    """The equation has no plain telescoping reading as a sum identity."""

"""Sequences, expression parsing, verification and the command line."""

from .parser import parse_expr
from .render import RenderedSum, render_sum_identity
from .sequences import PRESETS, SequenceSpec, lucas_u, lucas_v, preset, sequence_values
from .verify import Identity, VerificationReport, verify_pointwise

__all__ = [
    "parse_expr",
    "RenderedSum",
    "render_sum_identity",
    "PRESETS",
    "SequenceSpec",
    "lucas_u",
    "lucas_v",
    "preset",
    "sequence_values",
    "Identity",
    "VerificationReport",
    "verify_pointwise",
]

"""Finite biquandles, Yang-Baxter cohomology, and virtual knot invariants."""

from .core import (
    Biquandle,
    BlockConvention,
    OpKind,
    ParseError,
    ValidationReport,
    alexander_biquandle,
    apply_op,
    kink_witnesses,
    read_biquandle,
    switch,
    switch_inv,
    validate_biquandle,
    write_biquandle,
)

__all__ = [
    "Biquandle",
    "BlockConvention",
    "OpKind",
    "ParseError",
    "ValidationReport",
    "alexander_biquandle",
    "apply_op",
    "kink_witnesses",
    "read_biquandle",
    "switch",
    "switch_inv",
    "validate_biquandle",
    "write_biquandle",
]

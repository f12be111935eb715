"""Desk-scale experiments on string enumeration, incompressibility, halting testers and reflexive logic."""

from .errors import (
    CapExceeded,
    DeadEnd,
    EmptyTruncate,
    IndexOutOfRange,
    InvalidBits,
    LimitLabError,
    MalformedProgram,
    ParseError,
    SourceExhausted,
    UnboundAtom,
)

__version__ = "0.1.0"

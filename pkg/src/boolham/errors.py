"""Shared exception types.

The CLI maps these onto exit codes: parse problems exit 1, resource caps
exit 2, verification failures exit 3.
"""


class BoolhamError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(BoolhamError, ValueError):
    """Malformed expression, DIMACS, JSON, or circuit text.

    ``position`` is a 0-based character offset into the input when known.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class QubitCountError(BoolhamError, ValueError):
    """Operands act on registers of different sizes, or an index is out of range."""


class CapExceeded(BoolhamError, ValueError):
    """A qubit-count or term-count cap was exceeded (dense oracle, truth tables,
    compilation size guard)."""


class VerificationError(BoolhamError, ValueError):
    """An invariant check failed, or an input fails a structural validity check
    (e.g. a non-Boolean operator passed to model counting)."""

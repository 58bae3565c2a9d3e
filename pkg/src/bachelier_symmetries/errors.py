"""Exception types shared across the package."""

from __future__ import annotations


class InvalidParameter(ValueError):
    """An argument violates a documented precondition (bad order, zero rate, ...)."""


class DomainError(ValueError):
    """A group map or transformed solution was evaluated outside its domain.

    ``argument`` carries the offending log/sqrt argument when known;
    ``stage`` carries the zero-based pipeline index when the error happened
    inside a transform chain.
    """

    def __init__(self, message: str, argument: float | None = None, stage: int | None = None):
        super().__init__(message)
        self.argument = argument
        self.stage = stage


class RangeError(ArithmeticError):
    """An exponent passed the overflow guard (|x| > 700) during evaluation."""


class ParseError(ValueError):
    """Malformed expression text. Carries the byte offset and the expected tokens."""

    def __init__(self, offset: int, expected: tuple[str, ...], found: str):
        self.offset = offset
        self.expected = tuple(expected)
        self.found = found
        super().__init__(
            f"offset {offset}: expected {' or '.join(expected)}, found {found}")


class SemanticError(ValueError):
    """Structurally valid text with an out-of-range class, order or group index."""

    def __init__(self, offset: int, reason: str):
        self.offset = offset
        self.reason = reason
        super().__init__(f"offset {offset}: {reason}")

"""
Error hierarchy for monoforge.

Library code raises these; the CLI maps them onto exit codes.
"""

from typing import Optional


class MonoforgeError(Exception):
    """Base class for all monoforge errors."""


class EngineError(MonoforgeError):
    """Invalid input to the blowup engine."""


class DegenerateZero(EngineError):
    """Both monomials coincide with coefficient 1, so the binomial is identically zero."""


class InvalidChart(EngineError):
    """The chart variable is not part of the center, or the center is too small."""


class DimensionMismatch(EngineError):
    """Exponent vectors of different length were combined."""


class InvalidExponent(EngineError):
    """An exponent entry is negative or not an integer."""


class ParseError(MonoforgeError, ValueError):
    """Malformed binomial expression; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.message = message
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class ExpressionSyntaxError(ParseError):
    """Unexpected token or character."""


class NotABinomial(ParseError):
    """The expression does not consist of exactly two terms."""


class ZeroCoefficient(ParseError):
    """A term carries the coefficient 0."""


class CorpusFormatError(MonoforgeError, ValueError):
    """A corpus line could not be understood."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)

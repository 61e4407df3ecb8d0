"""Exception hierarchy shared by every module."""

from __future__ import annotations


class AddisoError(Exception):
    """Base class for all library errors."""


class NonPrimeError(AddisoError, ValueError):
    pass


class ReducibleError(AddisoError, ValueError):
    pass


class DegreeMismatchError(AddisoError, ValueError):
    pass


class DivisionByZeroError(AddisoError, ZeroDivisionError):
    pass


class DimensionMismatchError(AddisoError, ValueError):
    pass


class BadCodimensionError(AddisoError, ValueError):
    pass


class LengthTooShortError(AddisoError, ValueError):
    pass


class TooLargeError(AddisoError):
    """An enumeration would exceed its size cap."""


class BudgetExceededError(AddisoError):
    """An exhaustive search was estimated to exceed the step budget."""


class VerificationError(AddisoError, AssertionError):
    """A checked mathematical statement failed; carries a counterexample dump."""

    def __init__(self, message: str, dump: str = "") -> None:
        super().__init__(message)
        self.dump = dump


class ParseError(AddisoError, ValueError):
    """Malformed text input, with a 1-based line/column position."""

    def __init__(self, message: str, line: int = 0, col: int = 0) -> None:
        self.line = line
        self.col = col
        where = f"line {line}, col {col}: " if line else ""
        super().__init__(f"{where}{message}")

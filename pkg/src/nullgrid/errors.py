"""Shared exception types."""


class FieldMismatchError(ValueError):
    """Operands belong to different coefficient fields."""


class ArityMismatchError(ValueError):
    """Operands disagree on the number of variables."""


class PreconditionError(ValueError):
    """A documented precondition of an operation was violated.

    Carries the name of the failed condition so callers (and the CLI) can
    report which check tripped rather than a bare message.
    """

    def __init__(self, condition: str, message: str):
        self.condition = condition
        super().__init__(f"{condition}: {message}")


class PolyParseError(ValueError):
    """Syntax error in a polynomial expression, with character position."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (position {position})")


class InvariantViolation(RuntimeError):
    """An internal guarantee failed.  Always an implementation bug."""

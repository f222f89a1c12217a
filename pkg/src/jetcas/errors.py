"""Shared exception types."""


class JetcasError(Exception):
    """Base class for errors raised by this package."""


class InputError(JetcasError):
    """Malformed user input: bad ring spec, bad polynomial text, bad parameters."""


class ParseError(InputError):
    """Syntax error in polynomial text, carrying a 1-based column."""

    def __init__(self, message: str, column: int):
        super().__init__(f"syntax error at column {column}: {message}")
        self.column = column


class PreconditionError(JetcasError):
    """Semantically invalid request, e.g. a fiber point that is not on the scheme."""


class BudgetExceededError(JetcasError):
    """A computation hit a configured resource cap; partial state is discarded."""

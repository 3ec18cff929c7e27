"""Shared exception types."""

from __future__ import annotations


class FormatError(ValueError):
    """Malformed input text.  Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetError(RuntimeError):
    """An exhaustive computation would exceed its configured size budget."""

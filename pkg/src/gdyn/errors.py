"""Exception types shared across the package."""

from __future__ import annotations


class Error(Exception):
    """Base class for all gdyn errors."""


class ValidationError(Error):
    """A structural invariant failed (topology base condition, group axioms,
    action axioms, continuity of a map, ...).  The message names the
    violated invariant and, where possible, a witnessing element."""


class ParseError(Error):
    """A system file could not be parsed.  Carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(Error):
    """An operation was called outside its stated precondition."""


class LimitError(Error):
    """A configured size bound would be exceeded."""


class GenerationError(Error):
    """A rejection-sampling budget was exhausted; re-seed and retry."""

"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class CIToricError(Exception):
    """Base class for library errors."""


class ParseError(CIToricError, ValueError):
    """Malformed graph input. `line` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(CIToricError, ValueError):
    """An operation was called outside its documented domain."""


class GeneratorCountMismatch(PreconditionError):
    """Number of candidate generators differs from the height."""


class ResourceLimitError(CIToricError):
    """A configured search cap was exceeded.

    Distinct from a negative answer: the search was abandoned, not completed.
    """

    def __init__(self, what: str, size: int, cap: int):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")

"""Exception hierarchy shared by every graphspark module."""

from __future__ import annotations


class GraphSparkError(Exception):
    """Base class for all errors raised by graphspark."""


class ParseError(GraphSparkError, ValueError):
    """Malformed textual input (graph6, family specs, matrix files)."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class DomainError(GraphSparkError, ValueError):
    """Arguments outside the mathematical domain of an operation."""


class CapacityError(GraphSparkError):
    """Input exceeds a configured exhaustive-search limit."""


class PreconditionError(GraphSparkError, ValueError):
    """A documented precondition of an operation does not hold."""


class ConstructionError(GraphSparkError):
    """A matrix construction produced something violating its contract."""

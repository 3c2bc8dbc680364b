"""Exception types shared across the package."""


class GraphEntropyError(Exception):
    """Base class for all package-specific errors."""


class ParseError(GraphEntropyError, ValueError):
    """Malformed edge-list input. Carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(GraphEntropyError, ValueError):
    """Structurally invalid graph data (self-loops, id gaps, bad endpoints)."""


class DomainError(GraphEntropyError, ValueError):
    """Arguments outside an operation's domain (bad alpha, disconnected input, ...)."""


class CapacityError(GraphEntropyError, RuntimeError):
    """Input exceeds a hard size cap of an exact algorithm."""

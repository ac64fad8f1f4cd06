"""Exception types shared across the package."""

__all__ = [
    "VminorError",
    "GraphError",
    "ParseError",
    "FormulaError",
    "SizeLimitError",
    "ConsistencyError",
]


class VminorError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(VminorError, ValueError):
    """A graph operation was called with invalid arguments."""


class ParseError(VminorError, ValueError):
    """A graph file or other textual input is malformed."""


class FormulaError(VminorError, ValueError):
    """A formula is ill-scoped or an assignment does not match it."""


class SizeLimitError(VminorError, RuntimeError):
    """An input exceeds the resource cap of an exhaustive routine."""


class ConsistencyError(VminorError, RuntimeError):
    """An internal invariant failed; indicates a bug, not bad input."""

"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so solver and parser code
should raise the most specific class that applies.
"""


class SelfLoopError(ValueError):
    """An edge (v, v) was supplied; simple graphs have no loops."""


class VertexIndexError(IndexError):
    """A vertex index is outside 0..n-1."""


class DuplicateVertexError(ValueError):
    """A vertex sequence contains a repeated vertex."""


class IsolatedVertexError(ValueError):
    """Total domination is undefined: the graph is empty or has an isolated vertex."""


class NotAnEdgeError(ValueError):
    """The given vertex pair is not an edge of the graph."""


class IllegalPrefixError(ValueError):
    """A sequence prefix is not a legal open-neighborhood sequence."""


class HypothesisViolatedError(ValueError):
    """A theorem-shaped operation was called on a graph that fails its hypotheses."""


class InvalidSizeError(ValueError):
    """A graph family constructor was given an out-of-range size parameter."""


class BruteForceLimitError(ValueError):
    """The graph exceeds the size guard of a brute-force operation."""


class ParseError(ValueError):
    """Malformed graph6 or edge-list input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class TimeLimitError(RuntimeError):
    """The solver's deadline passed before an exact answer was proven."""


class MemoLimitError(RuntimeError):
    """The solver's memo table outgrew its configured memory cap."""

"""Exception hierarchy for the Artin groups engine."""

from typing import Optional, Sequence


class ArtinError(Exception):
    """Base class for every domain error raised by the library."""


class FieldError(ArtinError):
    """Bad field context: M out of range, foreign operands, bad divisor."""


class GraphParseError(ArtinError):
    """Syntax error in a Coxeter graph file."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class WordParseError(ArtinError):
    """Syntax error in an Artin word."""

    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"position {position}: {message}"
        super().__init__(message)
        self.position = position


class UnknownGeneratorError(ArtinError):
    """A generator name that is not a vertex of the graph."""


class NonSphericalError(ArtinError):
    """A connected component does not appear in the finite-type catalog."""

    def __init__(self, message: str, vertices: Sequence[str] = ()):
        super().__init__(message)
        self.vertices = tuple(vertices)


class DisconnectedGraphError(ArtinError):
    """An operation that needs a connected graph got a disconnected one."""


class InternalError(ArtinError):
    """An arithmetic invariant was violated. Never caused by user input."""

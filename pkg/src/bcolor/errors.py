"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations

from typing import Any


class BColorError(Exception):
    """Base class for all package errors."""


class GraphError(BColorError, ValueError):
    pass


class InvalidVertexId(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class EdgeNotFound(GraphError, KeyError):
    pass


class Disconnected(GraphError):
    pass


class SameVertex(GraphError):
    pass


class ParseError(BColorError, ValueError):
    """Malformed graph or coloring input."""


class UnknownFamily(BColorError, ValueError):
    pass


class PartialColoring(BColorError, ValueError):
    pass


class ClassViolation(BColorError):
    """The input left the graph class the algorithm relies on.

    ``diagnostics`` carries whatever statistics were available when the
    failure was detected (minimum/maximum degree, witness vertex, sizes).
    """

    def __init__(self, message: str, **diagnostics: Any) -> None:
        super().__init__(message)
        self.diagnostics = diagnostics

    def __str__(self) -> str:
        base = super().__str__()
        if not self.diagnostics:
            return base
        extra = ", ".join(f"{k}={v}" for k, v in sorted(self.diagnostics.items()))
        return f"{base} ({extra})"


class StructureViolation(ClassViolation):
    pass


class NotFound(StructureViolation):
    pass


class PaletteExhausted(ClassViolation):
    pass


class PaletteTooSmall(ClassViolation):
    pass

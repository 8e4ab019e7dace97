"""Exception types raised by the kgraphs package.

Everything inherits from KGraphError so callers can catch one base type.
Parse and validation errors carry enough position information to point a
user at the offending line or square.
"""
from __future__ import annotations


class KGraphError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(KGraphError):
    """Malformed text in the skeleton file format."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class RefError(KGraphError):
    """An id referenced before (or without) being declared."""


class DupError(KGraphError):
    """An id declared twice, or a square given for the same pair twice."""


class InvalidSquare(KGraphError):
    """A square whose four edges do not form a commuting-square shape."""


class MissingSquare(KGraphError):
    """A composable bi-colored pair with no square covering it."""


class NonBijectiveFlip(KGraphError):
    """Square system is not bijective on some color pair at some corner."""


class HexagonViolation(KGraphError):
    """Two reorderings of a tri-colored triple disagree (rank >= 3 only)."""


class EmptyGraph(KGraphError):
    """Graph has no vertices; nothing is defined over it."""


class NotComposable(KGraphError):
    """Edge word breaks the chain condition at some position."""

    def __init__(self, position: int, message: str = ""):
        detail = message or "range/source mismatch"
        super().__init__(f"position {position}: {detail}")
        self.position = position


class RangeMismatch(KGraphError):
    """Operands have different range vertices where equality is required."""


class DegreeMismatch(KGraphError):
    """Operands have different degrees where equality is required."""


class DegreeOutOfRange(KGraphError):
    """A requested degree or segment lies outside the available one."""


class DegreeError(KGraphError):
    """Componentwise arithmetic produced a negative coordinate."""


class HasSources(KGraphError):
    """Operation requires a sourceless graph but a dead direction exists."""

    def __init__(self, vertex: str, color: int):
        super().__init__(f"vertex {vertex!r} has no incoming edges of color {color}")
        self.vertex = vertex
        self.color = color


class NotHereditary(KGraphError):
    """Vertex set fails the hereditary (source-closed) requirement."""


class UnsupportedDegree(KGraphError):
    """Degree tuple has the wrong length for this graph's rank."""


class GenerationExhausted(KGraphError):
    """Random generation hit its retry budget without a valid instance."""

"""Exception hierarchy shared by all fabricmotifs modules.

Every error raised by the library derives from FabricError so that callers
(including the command line driver) can catch one type and report cleanly.
"""

from __future__ import annotations


class FabricError(Exception):
    """Base class for all library errors."""


class ParseError(FabricError):
    """A text input could not be parsed.

    Attributes:
        line: 1-based line number of the offending input line, or None when
            the problem is not tied to a single line.
        reason: human readable description of the problem.
    """

    def __init__(self, reason: str, line: int | None = None):
        self.line = line
        self.reason = reason
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{reason}")


class EmptyGraphError(FabricError):
    """The input describes a graph with no vertices."""


class DimensionMismatch(FabricError):
    """Two objects that must agree on size do not."""


class DegenerateMatrix(FabricError):
    """The matrix is too small for the requested statistic (fewer than 2 rows)."""


class TooLargeForExhaustive(FabricError):
    """Exhaustive ordering was requested for a graph above the factorial-search cap."""


class InvalidPermutation(FabricError):
    """A vertex ordering is not a bijection on 0..n-1."""


class MalformedTour(FabricError):
    """A tour file could not be interpreted as a permutation of city indices."""


class TourLengthMismatch(FabricError):
    """A tour file has the wrong number of cities for the graph it is applied to."""


class PatternOutOfBounds(FabricError):
    """A pattern's row or column range falls outside the matrix."""


class OverlapDetected(FabricError):
    """Two patterns claim at least one common matrix cell."""

"""Exception hierarchy shared by every maxcon module."""

from __future__ import annotations


class MaxconError(Exception):
    """Base class for all maxcon errors."""


class ValidationError(MaxconError, ValueError):
    """Input violates a documented precondition."""


class ParseError(ValidationError):
    """Malformed text input. Carries the 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


class NotGraphic(ValidationError):
    """Sequence has no simple-graph realization."""


class IllegalExchange(ValidationError):
    """Edge-exchange preconditions do not hold on the target graph."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None) -> None:
        self.pair = pair
        super().__init__(message)


class OverlapError(ValidationError):
    """Two graphs expected to be edge-disjoint share an edge."""


class DisconnectedError(ValidationError):
    """Operation needs a connected graph."""


class NotApplicable(ValidationError):
    """Weak-set notions only make sense when edge-connectivity < min degree."""


class HypothesisViolation(ValidationError):
    """A rewiring problem fails one of its hypotheses.

    ``clause`` is a short stable identifier of the failed condition.
    """

    def __init__(self, clause: str, message: str) -> None:
        self.clause = clause
        super().__init__(f"[{clause}] {message}")


class PreconditionFailed(ValidationError):
    """A factor/peeling bound is not satisfied."""


class ScaleError(ValidationError):
    """Instance exceeds an exhaustive-enumeration guard."""


class NoPerfectMatching(MaxconError):
    """Graph has no perfect matching."""


class NoImprovingMove(MaxconError):
    """No single edge-exchange improves the rewiring potential."""


class TheoremContradiction(MaxconError, RuntimeError):
    """A proved statement failed at runtime; always an implementation bug
    or an input that slipped past validation."""

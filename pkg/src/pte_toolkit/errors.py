"""
Exception hierarchy for pte-toolkit.

Solver preconditions, input problems and broken invariants are kept apart so
that the CLI can map them to distinct exit codes and the tool server can
report them as structured errors.
"""

from typing import Optional, Tuple


class PteToolkitError(Exception):
    """Base class for all toolkit errors."""


class InvalidGameError(PteToolkitError, ValueError):
    """A game, profile, player index or payoff vector is malformed."""


class GameParseError(InvalidGameError):
    """Syntax error in the game text format."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class SolverPreconditionError(PteToolkitError):
    """A solver was called on a game that violates its precondition."""


class GeneralPositionViolation(SolverPreconditionError):
    """Strict mode requires that no player is indifferent between two profiles."""

    def __init__(
        self,
        player: int,
        profiles: Tuple[Tuple[int, ...], Tuple[int, ...]],
        message: Optional[str] = None,
    ):
        self.player = player
        self.profiles = profiles
        super().__init__(
            message
            or f"player {player} is indifferent between {profiles[0]} and {profiles[1]}"
        )


class NotSymmetricError(SolverPreconditionError):
    """The game is not symmetric."""


class DiagonalTiesError(SolverPreconditionError):
    """Several diagonal profiles share the maximal diagonal payoff."""


class SymmetryCheckUnsupported(SolverPreconditionError):
    """Too many players to enumerate every permutation."""


class EmptySurvivorSetError(SolverPreconditionError):
    """A maximin or elimination round was requested on an empty survivor set."""


class InactiveStrategyError(SolverPreconditionError):
    """A strategy that was already deleted was queried for minimax domination."""


class InvalidProbabilityError(PteToolkitError, ValueError):
    """A probability outside [0, 1], or an empty parameter grid."""


class CorpusError(PteToolkitError):
    """The regression corpus is missing or unreadable."""


class InvariantViolation(PteToolkitError, AssertionError):
    """A property that holds by theorem failed at runtime."""

"""
Perfectly Transparent Equilibrium solver.

Starting from all profiles, each round computes the restricted maximin of
the survivors and keeps only the profiles that weakly dominate it. The
sequence of survivor sets is decreasing, so it reaches a fixpoint; a
profile that is never eliminated is the PTE.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Literal, Optional, Tuple

from .equilibria import MaximinVector, SurvivorSet, at_least, restricted_maximin, strategy_minima
from .errors import GeneralPositionViolation, InvariantViolation
from .game import Game, StrategyProfile, format_rational, is_general_position

logger = logging.getLogger(__name__)

SolveMode = Literal["strict", "lenient"]


@dataclass(frozen=True)
class Preemption:
    """Why a profile was eliminated: ``player`` can secure more by ``strategy``."""

    profile: StrategyProfile
    player: int
    strategy: int


@dataclass(frozen=True)
class EliminationRound:
    """One round: the pre-round survivors, their maximin, and what was dropped."""

    survivors: SurvivorSet
    maximin: MaximinVector
    eliminated: Tuple[StrategyProfile, ...]
    witnesses: Tuple[Preemption, ...]
    remaining: SurvivorSet


@dataclass(frozen=True)
class EliminationTrace:
    """Ordered elimination rounds.

    The last round either eliminates nothing or empties the survivor set.
    """

    rounds: Tuple[EliminationRound, ...]

    def __len__(self) -> int:
        return len(self.rounds)

    @property
    def maximins(self) -> Tuple[MaximinVector, ...]:
        return tuple(r.maximin for r in self.rounds)

    @property
    def eliminated(self) -> Tuple[Tuple[StrategyProfile, ...], ...]:
        return tuple(r.eliminated for r in self.rounds)

    def maximins_monotone(self) -> bool:
        """Each maximin vector weakly dominates the previous one."""
        return all(
            all(b >= a for a, b in zip(prev, cur))
            for prev, cur in zip(self.maximins, self.maximins[1:])
        )

    def replays(self, game: Game) -> bool:
        """Re-run every recorded round and compare its eliminations."""
        for r in self.rounds:
            survivors = elimination_round(game, r.survivors)
            if not survivors.issubset(r.survivors):
                return False
            dropped = r.survivors.difference(survivors).profiles(game)
            if dropped != r.eliminated:
                return False
        return True

    def to_dict(self, game: Game) -> List[Dict[str, Any]]:
        return [
            {
                "round": k + 1,
                "survivors": [list(p) for p in r.survivors.profiles(game)],
                "maximin": [format_rational(v) for v in r.maximin],
                "eliminated": [list(p) for p in r.eliminated],
                "witnesses": [
                    {"profile": list(w.profile), "player": w.player, "strategy": w.strategy}
                    for w in r.witnesses
                ],
            }
            for k, r in enumerate(self.rounds)
        ]


class Outcome(str, Enum):
    UNIQUE = "unique"
    NONE = "none"
    AMBIGUOUS = "ambiguous"


@dataclass(frozen=True)
class PteResult:
    """Result of ``pte_solve``.

    Attributes:
        outcome: unique, none, or ambiguous (lenient mode on tied games only)
        survivors: the fixpoint survivor set
        trace: every elimination round
        mode: the mode the solver ran in
    """

    outcome: Outcome
    survivors: Tuple[StrategyProfile, ...]
    trace: EliminationTrace
    mode: str = "strict"

    @property
    def profile(self) -> Optional[StrategyProfile]:
        return self.survivors[0] if self.outcome is Outcome.UNIQUE else None

    @property
    def exists(self) -> bool:
        return self.outcome is Outcome.UNIQUE

    def to_dict(self, game: Game, include_trace: bool = True) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "outcome": self.outcome.value,
            "mode": self.mode,
            "profiles": [list(p) for p in self.survivors],
            "payoffs": [
                [format_rational(v) for v in game.payoff_vector(p)] for p in self.survivors
            ],
            "rounds": len(self.trace),
        }
        if include_trace:
            result["trace"] = self.trace.to_dict(game)
        return result


def _witness(game: Game, index: int, maximin: MaximinVector, minima) -> Preemption:
    profile = game.profiles[index]
    vector = game.payoffs[index]
    for i, value in enumerate(vector):
        if value < maximin[i]:
            strategy = min(s for s, m in minima[i].items() if m == maximin[i])
            return Preemption(profile=profile, player=i, strategy=strategy)
    raise InvariantViolation(f"Eliminated profile {profile} has no preempting player")


def elimination_round(game: Game, survivors: SurvivorSet) -> SurvivorSet:
    """One round of preemption: keep survivors weakly above the restricted maximin.

    Raises:
        EmptySurvivorSetError: survivors is empty
    """
    return at_least(game, survivors, restricted_maximin(game, survivors))


def _round(game: Game, survivors: SurvivorSet) -> Tuple[EliminationRound, SurvivorSet]:
    maximin = restricted_maximin(game, survivors)
    kept = at_least(game, survivors, maximin)
    dropped = survivors.difference(kept)
    minima = strategy_minima(game, survivors) if dropped else []
    witnesses = tuple(_witness(game, k, maximin, minima) for k in dropped)
    record = EliminationRound(
        survivors=survivors,
        maximin=maximin,
        eliminated=dropped.profiles(game),
        witnesses=witnesses,
        remaining=kept,
    )
    return record, kept


def pte_solve(game: Game, mode: SolveMode = "strict") -> PteResult:
    """Iterate elimination rounds from the full profile set to the fixpoint.

    Args:
        game: the game to solve
        mode: "strict" requires general position; "lenient" accepts ties and
            may return an ambiguous survivor set

    Returns:
        PteResult with the fixpoint and the full elimination trace

    Raises:
        GeneralPositionViolation: strict mode on a game with ties
        InvariantViolation: more than one survivor in strict mode
    """
    if mode not in ("strict", "lenient"):
        raise ValueError(f"Unknown solve mode: {mode!r}")
    ties = is_general_position(game)
    if not ties:
        if mode == "strict":
            raise GeneralPositionViolation(ties.player, ties.profiles)
        logger.warning(
            f"Solving tied game in lenient mode: player {ties.player} "
            f"is indifferent between {ties.profiles[0]} and {ties.profiles[1]}"
        )

    survivors = SurvivorSet.full(game)
    rounds: List[EliminationRound] = []
    while True:
        record, kept = _round(game, survivors)
        rounds.append(record)
        logger.debug(
            f"Round {len(rounds)}: maximin {record.maximin}, "
            f"eliminated {len(record.eliminated)} of {len(survivors)}"
        )
        if not record.eliminated:
            break
        survivors = kept
        if not survivors:
            break

    final = survivors.profiles(game)
    trace = EliminationTrace(rounds=tuple(rounds))
    if not final:
        outcome = Outcome.NONE
    elif len(final) == 1:
        outcome = Outcome.UNIQUE
    elif mode == "strict":
        raise InvariantViolation(
            f"{len(final)} profiles survive elimination in a game in general position"
        )
    else:
        outcome = Outcome.AMBIGUOUS
    return PteResult(outcome=outcome, survivors=final, trace=trace, mode=mode)

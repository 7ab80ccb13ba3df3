"""
Registry of solution concepts.

Every concept turns a game into a JSON-friendly dict whose ``profiles`` entry
lists profile keys (strategy labels joined by commas) in lexicographic order.
The CLI, the tool server and the regression corpus all go through here.
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, Iterable, List, Optional, Sequence

from .equilibria import (
    SurvivorSet,
    hofstadter_equilibrium,
    individually_rational_set,
    nash_pure_set,
    restricted_maximin,
    translucent_set,
    translucent_thresholds,
)
from .errors import SolverPreconditionError
from .game import Game, format_rational, pareto_optimal_set, welfare_maximizing_set
from .minimax import minimax_rationalizable
from .pte import pte_solve

logger = logging.getLogger(__name__)


def profile_key(game: Game, profile: Sequence[int]) -> str:
    return ",".join(game.profile_labels(profile))


def profile_keys(game: Game, profiles: Iterable[Sequence[int]]) -> List[str]:
    return [profile_key(game, p) for p in sorted(tuple(p) for p in profiles)]


def payoff_texts(game: Game, profiles: Iterable[Sequence[int]]) -> List[List[str]]:
    return [
        [format_rational(v) for v in game.payoff_vector(p)]
        for p in sorted(tuple(p) for p in profiles)
    ]


class SolutionConcept(ABC):
    """
    Abstract interface for solution concepts.

    Subclasses set ``name`` and ``description`` and implement ``solve``.
    """

    name: str = ""
    description: str = ""

    @abstractmethod
    def solve(self, game: Game, lenient: bool = False) -> Dict[str, Any]:
        """
        Solve a game.

        Args:
            game: the game
            lenient: accept ties where the concept otherwise refuses them

        Returns:
            Dict with at least ``concept`` and ``profiles``

        Raises:
            SolverPreconditionError: the game violates the concept's precondition
        """
        pass

    def result(self, game: Game, profiles: Iterable[Sequence[int]], **extra) -> Dict[str, Any]:
        profiles = list(profiles)
        result = {
            "concept": self.name,
            "profiles": profile_keys(game, profiles),
            "payoffs": payoff_texts(game, profiles),
        }
        result.update(extra)
        return result


class PteConcept(SolutionConcept):
    name = "pte"
    description = "Perfectly Transparent Equilibrium by iterated preemption"

    def solve(self, game: Game, lenient: bool = False) -> Dict[str, Any]:
        outcome = pte_solve(game, "lenient" if lenient else "strict")
        rounds = outcome.trace.rounds
        return self.result(
            game,
            outcome.survivors,
            outcome=outcome.outcome.value,
            mode=outcome.mode,
            maximins=[[format_rational(v) for v in r.maximin] for r in rounds],
            eliminated=[profile_keys(game, r.eliminated) for r in rounds],
            witnesses=[
                [
                    {
                        "profile": profile_key(game, w.profile),
                        "player": w.player,
                        "strategy": game.strategy_label(w.player, w.strategy),
                    }
                    for w in r.witnesses
                ]
                for r in rounds
            ],
        )


class NashConcept(SolutionConcept):
    name = "nash"
    description = "Pure-strategy Nash equilibria"

    def solve(self, game: Game, lenient: bool = False) -> Dict[str, Any]:
        return self.result(game, nash_pure_set(game))


class IndividualRationalityConcept(SolutionConcept):
    name = "ir"
    description = "Individually rational profiles (above every player's maximin)"

    def solve(self, game: Game, lenient: bool = False) -> Dict[str, Any]:
        maximin = restricted_maximin(game, SurvivorSet.full(game))
        return self.result(
            game,
            individually_rational_set(game).profiles(game),
            maximin=[format_rational(v) for v in maximin],
        )


class TranslucentConcept(SolutionConcept):
    name = "te"
    description = "Translucent equilibrium candidates (second-lowest worst payoffs)"

    def solve(self, game: Game, lenient: bool = False) -> Dict[str, Any]:
        return self.result(
            game,
            translucent_set(game).profiles(game),
            thresholds=[format_rational(v) for v in translucent_thresholds(game)],
        )


class MinimaxConcept(SolutionConcept):
    name = "minimax"
    description = "Minimax-rationalizable profiles"

    def solve(self, game: Game, lenient: bool = False) -> Dict[str, Any]:
        outcome = minimax_rationalizable(game)
        result = self.result(game, outcome.profiles())
        result.update(outcome.to_dict(game))
        return result


class HofstadterConcept(SolutionConcept):
    name = "hofstadter"
    description = "Hofstadter (superrational) equilibrium of a symmetric game"

    def solve(self, game: Game, lenient: bool = False) -> Dict[str, Any]:
        return self.result(game, [hofstadter_equilibrium(game)])


class ParetoConcept(SolutionConcept):
    name = "pareto"
    description = "Pareto-optimal profiles"

    def solve(self, game: Game, lenient: bool = False) -> Dict[str, Any]:
        return self.result(game, pareto_optimal_set(game))


class WelfareConcept(SolutionConcept):
    name = "welfare"
    description = "Profiles maximizing the sum of payoffs"

    def solve(self, game: Game, lenient: bool = False) -> Dict[str, Any]:
        return self.result(game, welfare_maximizing_set(game))


CONCEPTS: Dict[str, SolutionConcept] = {
    c.name: c
    for c in (
        PteConcept(),
        NashConcept(),
        IndividualRationalityConcept(),
        TranslucentConcept(),
        MinimaxConcept(),
        HofstadterConcept(),
        ParetoConcept(),
        WelfareConcept(),
    )
}


def get_concept(name: str) -> SolutionConcept:
    try:
        return CONCEPTS[name]
    except KeyError:
        raise ValueError(f"Unknown concept: {name} (choose from {', '.join(CONCEPTS)})") from None


def solve_concept(game: Game, name: str, lenient: bool = False) -> Dict[str, Any]:
    """Solve one concept, turning precondition failures into an error entry."""
    try:
        return get_concept(name).solve(game, lenient=lenient)
    except SolverPreconditionError as e:
        logger.info(f"{name}: precondition failed: {e}")
        return {"concept": name, "error": type(e).__name__, "message": str(e)}


def solve_all(
    game: Game, lenient: bool = False, names: Optional[Iterable[str]] = None
) -> Dict[str, Dict[str, Any]]:
    """Every registered concept (or the named ones) on ``game``."""
    return {name: solve_concept(game, name, lenient) for name in (names or CONCEPTS)}

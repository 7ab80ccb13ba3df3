"""
Classical and single-round solution concepts.

- restricted_maximin: best worst payoff per player over a survivor set
- individually_rational_set: profiles above the maximin tuple
- nash_pure_set: pure-strategy Nash equilibria (weak best responses)
- hofstadter_equilibrium: superrational diagonal profile of a symmetric game
- translucent_set: single-round elimination against second-lowest worst payoffs
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from .errors import DiagonalTiesError, EmptySurvivorSetError, InvalidGameError, NotSymmetricError
from .game import Game, PayoffVector, Rational, StrategyProfile, diagonal, is_symmetric

logger = logging.getLogger(__name__)

MaximinVector = PayoffVector


@dataclass(frozen=True)
class SurvivorSet:
    """Subset of a game's profiles, stored as a bit mask over profile indices."""

    size: int
    mask: int = 0

    @classmethod
    def full(cls, game: Game) -> "SurvivorSet":
        return cls(size=game.profile_count, mask=(1 << game.profile_count) - 1)

    @classmethod
    def empty(cls, game: Game) -> "SurvivorSet":
        return cls(size=game.profile_count, mask=0)

    @classmethod
    def from_indices(cls, game: Game, indices: Iterable[int]) -> "SurvivorSet":
        mask = 0
        for k in indices:
            if not 0 <= k < game.profile_count:
                raise InvalidGameError(f"Profile index {k} out of range")
            mask |= 1 << k
        return cls(size=game.profile_count, mask=mask)

    @classmethod
    def from_profiles(cls, game: Game, profiles: Iterable[Sequence[int]]) -> "SurvivorSet":
        return cls.from_indices(game, (game.index_of(p) for p in profiles))

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, index: int) -> bool:
        return 0 <= index < self.size and bool(self.mask >> index & 1)

    def __iter__(self) -> Iterator[int]:
        """Yield member indices in ascending (lexicographic) order."""
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def issubset(self, other: "SurvivorSet") -> bool:
        return self.mask & ~other.mask == 0

    def difference(self, other: "SurvivorSet") -> "SurvivorSet":
        return SurvivorSet(size=self.size, mask=self.mask & ~other.mask)

    def profiles(self, game: Game) -> Tuple[StrategyProfile, ...]:
        return tuple(game.profiles[k] for k in self)

    def profile_set(self, game: Game) -> FrozenSet[StrategyProfile]:
        return frozenset(self.profiles(game))


def _check_survivors(game: Game, survivors: SurvivorSet) -> None:
    if survivors.size != game.profile_count:
        raise InvalidGameError(
            f"Survivor set covers {survivors.size} profiles, game has {game.profile_count}"
        )
    if not survivors:
        raise EmptySurvivorSetError("Maximin is undefined on an empty survivor set")


def strategy_minima(game: Game, survivors: SurvivorSet) -> List[Dict[int, Rational]]:
    """Per player, the worst surviving payoff of each strategy that still occurs."""
    minima: List[Dict[int, Rational]] = [{} for _ in range(game.player_count)]
    for k in survivors:
        profile = game.profiles[k]
        vector = game.payoffs[k]
        for i, s in enumerate(profile):
            worst = minima[i].get(s)
            if worst is None or vector[i] < worst:
                minima[i][s] = vector[i]
    return minima


def restricted_maximin(game: Game, survivors: SurvivorSet) -> MaximinVector:
    """Maximin of every player, looking only at surviving profiles.

    Strategies that appear in no surviving profile are ignored.

    Raises:
        EmptySurvivorSetError: survivors is empty
    """
    _check_survivors(game, survivors)
    return tuple(max(m.values()) for m in strategy_minima(game, survivors))


def at_least(game: Game, survivors: SurvivorSet, threshold: Sequence[Rational]) -> SurvivorSet:
    """Survivors whose payoff vector weakly dominates ``threshold``."""
    mask = 0
    for k in survivors:
        vector = game.payoffs[k]
        if all(v >= t for v, t in zip(vector, threshold)):
            mask |= 1 << k
    return SurvivorSet(size=survivors.size, mask=mask)


def individually_rational_set(game: Game) -> SurvivorSet:
    """Profiles that give every player at least their maximin."""
    full = SurvivorSet.full(game)
    return at_least(game, full, restricted_maximin(game, full))


def nash_pure_set(game: Game) -> FrozenSet[StrategyProfile]:
    """Pure Nash equilibria: no player gains by a unilateral deviation."""
    strides = game.strides
    equilibria = []
    for k, profile in enumerate(game.profiles):
        vector = game.payoffs[k]
        stable = True
        for i, s in enumerate(profile):
            base = k - s * strides[i]
            own = vector[i]
            for t in range(game.strategy_counts[i]):
                if t != s and game.payoffs[base + t * strides[i]][i] > own:
                    stable = False
                    break
            if not stable:
                break
        if stable:
            equilibria.append(profile)
    return frozenset(equilibria)


def hofstadter_equilibrium(game: Game) -> StrategyProfile:
    """The diagonal profile (υ, ..., υ) with the highest common payoff.

    Raises:
        NotSymmetricError: the game is not symmetric
        DiagonalTiesError: two diagonal profiles share the best payoff
    """
    if not is_symmetric(game):
        raise NotSymmetricError("Hofstadter equilibrium requires a symmetric game")
    candidates = list(diagonal(game))
    values = [game.payoff(p, 0) for p in candidates]
    best = max(values)
    winners = [p for p, v in zip(candidates, values) if v == best]
    if len(winners) > 1:
        raise DiagonalTiesError(f"Diagonal profiles {winners} tie at payoff {best}")
    return winners[0]


def translucent_thresholds(game: Game) -> Tuple[Rational, ...]:
    """Second-lowest per-strategy worst payoff for each player.

    Duplicated minima count as separate entries; a player with one strategy
    uses that strategy's minimum.
    """
    thresholds = []
    for m in strategy_minima(game, SurvivorSet.full(game)):
        ordered = sorted(m.values())
        thresholds.append(ordered[1] if len(ordered) > 1 else ordered[0])
    return tuple(thresholds)


def translucent_set(game: Game) -> SurvivorSet:
    """Profiles giving every player at least their translucent threshold."""
    return at_least(game, SurvivorSet.full(game), translucent_thresholds(game))

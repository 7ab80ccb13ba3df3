"""
Minimax-rationalizability.

A strategy is minimax-dominated when another strategy's worst payoff is
strictly greater than its best payoff, both taken over the opponents'
still-active strategies. Iterated deletion of such strategies reaches a
fixpoint that does not depend on the deletion order.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

from .errors import InactiveStrategyError, InvalidGameError
from .game import Game, Rational, StrategyProfile
from .sampler import counter_generator

logger = logging.getLogger(__name__)

ActiveStrategySets = Tuple[FrozenSet[int], ...]
Deletion = Tuple[int, int]


def full_strategy_sets(game: Game) -> ActiveStrategySets:
    return tuple(frozenset(range(c)) for c in game.strategy_counts)


def _payoff_range(
    game: Game, active: ActiveStrategySets, player: int, strategy: int
) -> Tuple[Rational, Rational]:
    """(min, max) of the player's payoff for ``strategy`` over active opponents."""
    strides = game.strides
    others = [sorted(active[j]) for j in range(game.player_count) if j != player]
    other_strides = [strides[j] for j in range(game.player_count) if j != player]
    base = strategy * strides[player]
    low = high = None
    for combo in itertools.product(*others):
        k = base + sum(s * w for s, w in zip(combo, other_strides))
        value = game.payoffs[k][player]
        if low is None or value < low:
            low = value
        if high is None or value > high:
            high = value
    return low, high


def _check_active(game: Game, active: Sequence[FrozenSet[int]]) -> None:
    if len(active) != game.player_count:
        raise InvalidGameError(f"Expected strategy sets for {game.player_count} players")
    for i, strategies in enumerate(active):
        if not strategies:
            raise InvalidGameError(f"Player {i} has no active strategy")
        if any(not 0 <= s < game.strategy_counts[i] for s in strategies):
            raise InvalidGameError(f"Active strategies of player {i} out of range")


def minimax_dominated(
    game: Game, active: ActiveStrategySets, player: int, strategy: int
) -> Optional[int]:
    """Return the lowest-index active strategy that minimax-dominates ``strategy``.

    Args:
        game: the game
        active: per-player active strategies
        player: whose strategy is tested
        strategy: the candidate, which must be active

    Returns:
        A dominating strategy, or None

    Raises:
        InactiveStrategyError: strategy is not in active[player]
    """
    game.validate_player(player)
    _check_active(game, active)
    if strategy not in active[player]:
        raise InactiveStrategyError(f"Strategy {strategy} of player {player} is not active")
    _, best = _payoff_range(game, active, player, strategy)
    for other in sorted(active[player]):
        if other == strategy:
            continue
        worst, _ = _payoff_range(game, active, player, other)
        if worst > best:
            return other
    return None


def dominated_strategies(game: Game, active: ActiveStrategySets) -> List[Deletion]:
    """All currently minimax-dominated (player, strategy) pairs, in index order."""
    found = []
    for player in range(game.player_count):
        ranges = {s: _payoff_range(game, active, player, s) for s in sorted(active[player])}
        top_worst = max(low for low, _ in ranges.values())
        for s, (_, best) in ranges.items():
            if top_worst > best:
                found.append((player, s))
    return found


@dataclass(frozen=True)
class MinimaxResult:
    """Fixpoint of iterated minimax deletion.

    Attributes:
        active: surviving strategies per player
        deletions: strategies deleted in each sweep, as (player, strategy)
    """

    active: ActiveStrategySets
    deletions: Tuple[Tuple[Deletion, ...], ...]

    def is_rationalizable(self, profile: Sequence[int]) -> bool:
        return all(s in self.active[i] for i, s in enumerate(profile))

    def profiles(self) -> Tuple[StrategyProfile, ...]:
        return tuple(itertools.product(*(sorted(a) for a in self.active)))

    def to_dict(self, game: Game) -> Dict[str, Any]:
        return {
            "active": [
                [game.strategy_label(i, s) for s in sorted(a)] for i, a in enumerate(self.active)
            ],
            "deletions": [
                [[player, game.strategy_label(player, s)] for player, s in sweep]
                for sweep in self.deletions
            ],
        }


def minimax_rationalizable(game: Game) -> MinimaxResult:
    """Delete every minimax-dominated strategy of every player per sweep until none is left."""
    active = [set(a) for a in full_strategy_sets(game)]
    sweeps: List[Tuple[Deletion, ...]] = []
    while True:
        frozen = tuple(frozenset(a) for a in active)
        found = dominated_strategies(game, frozen)
        if not found:
            break
        for player, s in found:
            active[player].discard(s)
        sweeps.append(tuple(found))
        logger.debug(f"Minimax sweep {len(sweeps)} deleted {found}")
    return MinimaxResult(active=tuple(frozenset(a) for a in active), deletions=tuple(sweeps))


def single_deletion_fixpoint(game: Game, order_seed: int) -> ActiveStrategySets:
    """Delete one dominated strategy at a time, chosen at random from ``order_seed``."""
    rng = counter_generator(order_seed, 0)
    active = [set(a) for a in full_strategy_sets(game)]
    while True:
        found = dominated_strategies(game, tuple(frozenset(a) for a in active))
        if not found:
            break
        player, s = found[int(rng.integers(len(found)))]
        active[player].discard(s)
    return tuple(frozenset(a) for a in active)

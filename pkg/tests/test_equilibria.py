"""Tests for survivor sets and the single-round solution concepts."""

import pytest

from pte_toolkit.equilibria import (
    SurvivorSet,
    at_least,
    hofstadter_equilibrium,
    individually_rational_set,
    nash_pure_set,
    restricted_maximin,
    strategy_minima,
    translucent_set,
    translucent_thresholds,
)
from pte_toolkit.errors import (
    DiagonalTiesError,
    EmptySurvivorSetError,
    InvalidGameError,
    NotSymmetricError,
)
from pte_toolkit.game import Game
from tests import oracle


class TestSurvivorSet:
    """Test the bit-mask profile set."""

    def test_full_and_empty(self, prisoners_dilemma):
        """Test the two extreme sets."""
        full = SurvivorSet.full(prisoners_dilemma)
        empty = SurvivorSet.empty(prisoners_dilemma)
        assert len(full) == 4
        assert list(full) == [0, 1, 2, 3]
        assert not empty
        assert len(empty) == 0

    def test_set_operations(self, prisoners_dilemma):
        """Test membership, subset and difference."""
        game = prisoners_dilemma
        full = SurvivorSet.full(game)
        diagonal = SurvivorSet.from_profiles(game, [(1, 1), (0, 0)])
        assert list(diagonal) == [0, 3]
        assert 3 in diagonal and 1 not in diagonal
        assert diagonal.issubset(full)
        assert not full.issubset(diagonal)
        assert list(full.difference(diagonal)) == [1, 2]
        assert diagonal.profiles(game) == ((0, 0), (1, 1))
        assert diagonal.profile_set(game) == {(0, 0), (1, 1)}

    def test_index_out_of_range(self, prisoners_dilemma):
        """Test that indices must belong to the game."""
        with pytest.raises(InvalidGameError):
            SurvivorSet.from_indices(prisoners_dilemma, [4])


class TestRestrictedMaximin:
    """Test the maximin over surviving profiles."""

    def test_full_set(self, prisoners_dilemma, asymmetric_social_dilemma):
        """Test the unrestricted maximin."""
        assert restricted_maximin(prisoners_dilemma, SurvivorSet.full(prisoners_dilemma)) == (1, 1)
        game = asymmetric_social_dilemma
        assert restricted_maximin(game, SurvivorSet.full(game)) == (5, 3)

    def test_restricted(self, prisoners_dilemma):
        """Test that eliminated profiles no longer count."""
        survivors = SurvivorSet.from_profiles(prisoners_dilemma, [(0, 0), (1, 1)])
        assert restricted_maximin(prisoners_dilemma, survivors) == (2, 2)

    def test_missing_strategies_ignored(self, prisoners_dilemma):
        """Test that a strategy with no surviving profile is skipped."""
        survivors = SurvivorSet.from_profiles(prisoners_dilemma, [(1, 0)])
        assert restricted_maximin(prisoners_dilemma, survivors) == (0, 3)

    def test_empty_raises(self, prisoners_dilemma):
        """Test the empty-set precondition."""
        with pytest.raises(EmptySurvivorSetError):
            restricted_maximin(prisoners_dilemma, SurvivorSet.empty(prisoners_dilemma))

    def test_foreign_set_raises(self, prisoners_dilemma, goods):
        """Test that a survivor set from another game is rejected."""
        with pytest.raises(InvalidGameError):
            restricted_maximin(prisoners_dilemma, SurvivorSet.full(goods))

    def test_strategy_minima(self, prisoners_dilemma):
        """Test per-strategy worst payoffs."""
        minima = strategy_minima(prisoners_dilemma, SurvivorSet.full(prisoners_dilemma))
        assert minima == [{0: 1, 1: 0}, {0: 1, 1: 0}]

    def test_at_least(self, prisoners_dilemma):
        """Test the weak-dominance filter."""
        full = SurvivorSet.full(prisoners_dilemma)
        assert at_least(prisoners_dilemma, full, (2, 2)).profiles(prisoners_dilemma) == ((1, 1),)


class TestIndividualRationality:
    """Test individually rational profiles."""

    def test_prisoners_dilemma(self, prisoners_dilemma):
        """Test the dilemma's two IR profiles."""
        rational = individually_rational_set(prisoners_dilemma)
        assert rational.profile_set(prisoners_dilemma) == {(0, 0), (1, 1)}

    def test_matches_oracle(self, goods, pte_not_minimax):
        """Test against brute force."""
        for game in (goods, pte_not_minimax):
            t = oracle.table(game.strategy_counts, game.payoffs)
            expected = oracle.individually_rational(t, game.player_count)
            assert individually_rational_set(game).profile_set(game) == expected


class TestNash:
    """Test pure Nash equilibria."""

    def test_known_games(self, prisoners_dilemma, chicken, coordination):
        """Test the textbook equilibria."""
        assert nash_pure_set(prisoners_dilemma) == {(0, 0)}
        assert nash_pure_set(chicken) == {(0, 1), (1, 0)}
        assert nash_pure_set(coordination) == {(0, 0), (1, 1)}

    def test_weak_best_responses(self, traveler):
        """Test that ties with a deviation keep a profile stable."""
        assert nash_pure_set(traveler) == {(0, 0), (1, 1), (2, 2)}

    def test_no_pure_equilibrium(self):
        """Test matching pennies."""
        game = Game.from_matrix([[(1, -1), (-1, 1)], [(-1, 1), (1, -1)]])
        assert nash_pure_set(game) == frozenset()

    def test_three_players(self, three_player):
        """Test a three-player game against brute force."""
        t = oracle.table(three_player.strategy_counts, three_player.payoffs)
        assert nash_pure_set(three_player) == oracle.nash(t, three_player.strategy_counts)


class TestHofstadter:
    """Test the superrational diagonal profile."""

    def test_prisoners_dilemma(self, prisoners_dilemma, chicken):
        """Test that both players cooperate."""
        assert hofstadter_equilibrium(prisoners_dilemma) == (1, 1)
        assert hofstadter_equilibrium(chicken) == (1, 1)

    def test_not_symmetric(self, asymmetric_2x2):
        """Test the symmetry precondition."""
        with pytest.raises(NotSymmetricError):
            hofstadter_equilibrium(asymmetric_2x2)

    def test_diagonal_tie(self):
        """Test that tied diagonal payoffs are refused."""
        game = Game.from_matrix([[(1, 1), (0, 2)], [(2, 0), (1, 1)]])
        with pytest.raises(DiagonalTiesError):
            hofstadter_equilibrium(game)


class TestTranslucent:
    """Test translucent candidates."""

    def test_prisoners_dilemma(self, prisoners_dilemma):
        """Test thresholds and candidates."""
        assert translucent_thresholds(prisoners_dilemma) == (1, 1)
        assert translucent_set(prisoners_dilemma).profile_set(prisoners_dilemma) == {
            (0, 0),
            (1, 1),
        }

    def test_duplicate_minima(self, bertrand):
        """Test that equal minima count as separate entries."""
        assert translucent_thresholds(bertrand) == (0, 0)

    def test_single_strategy(self):
        """Test that a one-strategy player uses that strategy's minimum."""
        game = Game(strategy_counts=(1, 2), payoffs=[(1, 2), (3, 4)])
        assert translucent_thresholds(game) == (1, 4)

    def test_contains_individually_rational(self, goods, asymmetric_social_dilemma):
        """Test that every IR profile is a translucent candidate."""
        for game in (goods, asymmetric_social_dilemma):
            assert individually_rational_set(game).issubset(translucent_set(game))

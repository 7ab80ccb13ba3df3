"""Shared games for the test suite."""

import pytest

from pte_toolkit.corpus import corpus_dir
from pte_toolkit.game import Game
from pte_toolkit.gamefile import read_game


def corpus_game(name: str) -> Game:
    return read_game(corpus_dir() / f"{name}.game")


@pytest.fixture
def prisoners_dilemma():
    """Defect = 0, Cooperate = 1."""
    return Game.from_matrix(
        [[(1, 1), (3, 0)], [(0, 3), (2, 2)]],
        labels=[["Defect", "Cooperate"], ["Defect", "Cooperate"]],
    )


@pytest.fixture
def chicken():
    return Game.from_matrix(
        [[(0, 0), (3, 1)], [(1, 3), (2, 2)]],
        labels=[["Straight", "Swerve"], ["Straight", "Swerve"]],
    )


@pytest.fixture
def coordination():
    return Game.from_matrix(
        [[(1, 1), (0, 0)], [(0, 0), (2, 2)]],
        labels=[["Sushi", "Pizza"], ["Sushi", "Pizza"]],
    )


@pytest.fixture
def asymmetric_2x2():
    return Game.from_matrix(
        [[(0, 2), (2, 3)], [(3, 0), (1, 1)]],
        labels=[["A", "B"], ["C", "D"]],
    )


@pytest.fixture
def goods():
    return corpus_game("goods")


@pytest.fixture
def pte_not_minimax():
    return corpus_game("pte_not_minimax")


@pytest.fixture
def minimax_dominated_game():
    return corpus_game("minimax_dominated")


@pytest.fixture
def minimax_individual():
    return corpus_game("minimax_individual")


@pytest.fixture
def asymmetric_social_dilemma():
    return corpus_game("asymmetric_social_dilemma")


@pytest.fixture
def bertrand():
    return corpus_game("bertrand")


@pytest.fixture
def traveler():
    return corpus_game("traveler")


@pytest.fixture
def three_player():
    """2x2x2 game in general position with payoffs 1..8 per player."""
    payoffs = [(k + 1, 8 - k, (3 * k) % 8 + 1) for k in range(8)]
    return Game(strategy_counts=(2, 2, 2), payoffs=payoffs)

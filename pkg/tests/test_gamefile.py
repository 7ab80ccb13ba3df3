"""Tests for the game text format."""

from fractions import Fraction

import pytest
from hypothesis import given

from pte_toolkit.errors import GameParseError
from pte_toolkit.game import Game
from pte_toolkit.gamefile import parse_game, read_game, serialize_game, write_game
from tests import strategies

PD_TEXT = """\
# prisoner's dilemma
players: 2
strategies: 2 2
labels: Defect Cooperate
labels: Defect Cooperate
1 1
3 0   # temptation
0 3

2 2
"""


class TestParseGame:
    """Test parsing."""

    def test_prisoners_dilemma(self, prisoners_dilemma):
        """Test comments, blank lines and labels."""
        assert parse_game(PD_TEXT) == prisoners_dilemma

    def test_numbers(self):
        """Test integers, decimals, fractions and negatives."""
        game = parse_game("players: 1\nstrategies: 4\n1\n1.375\n11/6\n-3/4\n")
        expected = [1, Fraction(11, 8), Fraction(11, 6), Fraction(-3, 4)]
        assert [v[0] for v in game.payoffs] == expected

    def test_header_without_space(self):
        """Test a header whose value follows the colon directly."""
        game = parse_game("players:1\nstrategies:2\n1\n2\n")
        assert game.strategy_counts == (2,)

    def test_bad_number_position(self):
        """Test that a bad token is located by line and column."""
        text = "players: 2\nstrategies: 2 2\n1 1\n3 x\n0 3\n2 2\n"
        with pytest.raises(GameParseError) as excinfo:
            parse_game(text)
        assert excinfo.value.line == 4
        assert excinfo.value.column == 3
        assert "line 4, column 3" in str(excinfo.value)

    def test_missing_header(self):
        """Test a file that starts with payoffs."""
        with pytest.raises(GameParseError) as excinfo:
            parse_game("1 1\n")
        assert excinfo.value.line == 1

    def test_wrong_payoff_count(self):
        """Test too few and too many payoff lines."""
        with pytest.raises(GameParseError):
            parse_game("players: 2\nstrategies: 2 2\n1 1\n3 0\n0 3\n")
        with pytest.raises(GameParseError):
            parse_game("players: 1\nstrategies: 1\n1\n2\n")

    def test_wrong_vector_length(self):
        """Test a payoff line with the wrong number of values."""
        with pytest.raises(GameParseError) as excinfo:
            parse_game("players: 2\nstrategies: 1 1\n1\n")
        assert excinfo.value.line == 3

    def test_label_errors(self):
        """Test missing and miscounted label lines."""
        with pytest.raises(GameParseError):
            parse_game("players: 2\nstrategies: 1 1\nlabels: A\n1 1\n")
        with pytest.raises(GameParseError):
            parse_game("players: 1\nstrategies: 2\nlabels: A\n1\n2\n")
        with pytest.raises(GameParseError):
            parse_game("players: 1\nstrategies: 2\nlabels: A A\n1\n2\n")

    def test_division_by_zero(self):
        """Test a fraction with zero denominator."""
        with pytest.raises(GameParseError):
            parse_game("players: 1\nstrategies: 1\n1/0\n")

    def test_empty(self):
        """Test empty input."""
        with pytest.raises(GameParseError):
            parse_game("# nothing\n\n")


class TestSerializeGame:
    """Test canonical output."""

    def test_canonical_text(self, prisoners_dilemma):
        """Test the canonical prisoner's dilemma."""
        assert serialize_game(prisoners_dilemma) == (
            "players: 2\nstrategies: 2 2\n"
            "labels: Defect Cooperate\nlabels: Defect Cooperate\n"
            "1 1\n3 0\n0 3\n2 2\n"
        )

    def test_number_forms(self):
        """Test integer, decimal and fraction output."""
        game = Game(strategy_counts=(3,), payoffs=[(4,), (Fraction(1, 8),), (Fraction(2, 3),)])
        assert serialize_game(game).splitlines()[2:] == ["4", "0.125", "2/3"]

    def test_goods_game(self, goods):
        """Test that parsing canonical text gives the game back."""
        text = serialize_game(goods)
        assert "0.75 1.7" in text
        assert parse_game(text) == goods


class TestFiles:
    """Test reading and writing files."""

    def test_write_and_read(self, tmp_path, asymmetric_2x2):
        """Test a file with a comment header."""
        path = write_game(asymmetric_2x2, tmp_path / "g.game", comment="seed 1\nindex 2")
        assert path.read_text().startswith("# seed 1\n# index 2\nplayers: 2\n")
        assert read_game(path) == asymmetric_2x2

    def test_missing_file(self, tmp_path):
        """Test that a missing file surfaces as OSError."""
        with pytest.raises(OSError):
            read_game(tmp_path / "absent.game")


class TestRoundTripProperties:
    """Property-based tests of the canonical text."""

    @given(strategies.games())
    def test_parse_inverts_serialize(self, game):
        """Test that parsing canonical text gives back any game."""
        assert parse_game(serialize_game(game)) == game

    @given(strategies.games())
    def test_canonical_text_is_stable(self, game):
        """Test that canonical text is a fixpoint of parse then serialize."""
        text = serialize_game(game)
        assert serialize_game(parse_game(text)) == text

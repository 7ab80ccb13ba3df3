"""Tests for the solution concept registry."""

import pytest

from pte_toolkit.concepts import (
    CONCEPTS,
    SolutionConcept,
    get_concept,
    profile_key,
    solve_all,
    solve_concept,
)


class TestRegistry:
    """Test concept lookup."""

    def test_names(self):
        """Test that every concept is registered under its name."""
        assert list(CONCEPTS) == [
            "pte",
            "nash",
            "ir",
            "te",
            "minimax",
            "hofstadter",
            "pareto",
            "welfare",
        ]
        for name, concept in CONCEPTS.items():
            assert isinstance(concept, SolutionConcept)
            assert concept.name == name
            assert concept.description

    def test_unknown(self):
        """Test an unknown concept name."""
        with pytest.raises(ValueError, match="Unknown concept"):
            get_concept("correlated")

    def test_profile_key(self, prisoners_dilemma):
        """Test label keys."""
        assert profile_key(prisoners_dilemma, (1, 0)) == "Cooperate,Defect"


class TestSolve:
    """Test concept results."""

    def test_pte(self, prisoners_dilemma):
        """Test the PTE result with its trace."""
        result = solve_concept(prisoners_dilemma, "pte")
        assert result["profiles"] == ["Cooperate,Cooperate"]
        assert result["payoffs"] == [["2", "2"]]
        assert result["outcome"] == "unique"
        assert result["eliminated"][0] == ["Defect,Cooperate", "Cooperate,Defect"]
        assert result["witnesses"][0][0] == {
            "profile": "Defect,Cooperate",
            "player": 1,
            "strategy": "Defect",
        }

    def test_profiles_sorted(self, chicken):
        """Test lexicographic profile order."""
        assert solve_concept(chicken, "nash")["profiles"] == ["Straight,Swerve", "Swerve,Straight"]

    def test_precondition_becomes_error(self, asymmetric_2x2, coordination):
        """Test that precondition failures are reported, not raised."""
        assert solve_concept(asymmetric_2x2, "hofstadter")["error"] == "NotSymmetricError"
        result = solve_concept(coordination, "pte")
        assert result["error"] == "GeneralPositionViolation"
        assert "indifferent" in result["message"]

    def test_lenient(self, coordination):
        """Test lenient PTE."""
        assert solve_concept(coordination, "pte", lenient=True)["outcome"] == "ambiguous"

    def test_minimax_fields(self, minimax_dominated_game):
        """Test active sets and deletions."""
        result = solve_concept(minimax_dominated_game, "minimax")
        assert result["active"] == [["B", "C"], ["E", "F"]]
        assert result["deletions"] == [[[0, "A"]], [[1, "D"]]]

    def test_solve_all(self, prisoners_dilemma):
        """Test every concept at once."""
        results = solve_all(prisoners_dilemma)
        assert set(results) == set(CONCEPTS)
        assert results["ir"]["maximin"] == ["1", "1"]
        assert results["te"]["thresholds"] == ["1", "1"]
        assert solve_all(prisoners_dilemma, names=["nash"]).keys() == {"nash"}

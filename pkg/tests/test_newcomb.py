"""Tests for the Newcomb expected-utility calculator."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pte_toolkit.errors import InvalidProbabilityError
from pte_toolkit.newcomb import (
    Action,
    BoxState,
    NewcombProblem,
    Theory,
    canonical_problem,
    expected_utilities,
    recommendation_sweep,
)
from tests import strategies


class TestNewcombProblem:
    """Test the payoff table and its parameters."""

    def test_utility(self):
        """Test the four outcomes."""
        problem = canonical_problem()
        assert problem.utility(Action.TWO, BoxState.FULL) == 1_001_000
        assert problem.utility(Action.ONE, BoxState.FULL) == 1_000_000
        assert problem.utility("TWO", "EMPTY") == 1_000
        assert problem.utility(Action.ONE, BoxState.EMPTY) == 0

    def test_defaults(self):
        """Test the default prior and accuracy."""
        problem = canonical_problem()
        assert problem.prior_full == Fraction(1, 2)
        assert problem.accuracy == 1

    def test_probabilities_validated(self):
        """Test that parameters must lie in [0, 1]."""
        with pytest.raises(InvalidProbabilityError):
            canonical_problem(prior_full="3/2")
        with pytest.raises(InvalidProbabilityError):
            canonical_problem(accuracy=-0.1)
        with pytest.raises(InvalidProbabilityError):
            canonical_problem(accuracy="often")

    def test_with_parameter(self):
        """Test that CDT varies the prior and the others the accuracy."""
        problem = canonical_problem()
        assert problem.with_parameter(Theory.CDT, "1/4").prior_full == Fraction(1, 4)
        assert problem.with_parameter("nndt", "0.9").accuracy == Fraction(9, 10)
        assert problem.with_parameter(Theory.EDT, "0.9").prior_full == Fraction(1, 2)


class TestExpectedUtilities:
    """Test the three decision theories."""

    def test_cdt_two_boxes(self):
        """Test that CDT two-boxes for every prior."""
        for prior in ("0", "1/2", "1"):
            verdict = expected_utilities(canonical_problem(prior_full=prior), Theory.CDT)
            assert verdict.recommended is Action.TWO
            assert verdict.expected[Action.TWO] - verdict.expected[Action.ONE] == 1_000

    def test_cdt_values(self):
        """Test CDT at prior 1/2."""
        verdict = expected_utilities(canonical_problem(), Theory.CDT)
        assert verdict.expected == {Action.ONE: 500_000, Action.TWO: 501_000}
        assert verdict.parameter == Fraction(1, 2)

    @pytest.mark.parametrize("theory", [Theory.EDT, Theory.NNDT])
    def test_reliable_predictor(self, theory):
        """Test that a perfect predictor makes one-boxing best."""
        verdict = expected_utilities(canonical_problem(accuracy=1), theory)
        assert verdict.expected == {Action.ONE: 1_000_000, Action.TWO: 1_000}
        assert verdict.recommended is Action.ONE

    def test_tie(self):
        """Test the accuracy at which EDT is indifferent."""
        verdict = expected_utilities(canonical_problem(accuracy="1001/2000"), Theory.EDT)
        assert verdict.tie
        assert verdict.recommended is None
        assert verdict.to_dict()["recommended"] is None

    def test_custom_payoffs(self):
        """Test a payoff table given as decimals."""
        problem = NewcombProblem(two_full="10.5", one_full=10, two_empty="0.5", one_empty=0)
        verdict = expected_utilities(problem, "cdt")
        assert verdict.expected[Action.TWO] == Fraction(11, 2)

    def test_to_dict(self):
        """Test the JSON-friendly verdict."""
        data = expected_utilities(canonical_problem(accuracy="0.9"), Theory.NNDT).to_dict()
        assert data == {
            "theory": "nndt",
            "expected": {"ONE": "900000", "TWO": "101000"},
            "recommended": "ONE",
            "parameter": "0.9",
        }


class TestSweep:
    """Test recommendation sweeps."""

    def test_edt_switches(self):
        """Test that EDT switches from TWO to ONE as accuracy grows."""
        verdicts = recommendation_sweep(canonical_problem(), Theory.EDT, ["0", "1/2", "0.9", "1"])
        assert [v.recommended for v in verdicts] == [Action.TWO, Action.TWO, Action.ONE, Action.ONE]
        assert [v.parameter for v in verdicts] == [0, Fraction(1, 2), Fraction(9, 10), 1]

    def test_empty_grid(self):
        """Test that an empty grid is refused."""
        with pytest.raises(InvalidProbabilityError):
            recommendation_sweep(canonical_problem(), Theory.CDT, [])

    def test_invalid_value(self):
        """Test a grid value outside [0, 1]."""
        with pytest.raises(InvalidProbabilityError):
            recommendation_sweep(canonical_problem(), Theory.CDT, ["0.5", "2"])


probabilities = st.fractions(min_value=0, max_value=1, max_denominator=1000)
payoff_tables = st.lists(strategies.rationals, min_size=4, max_size=4)


class TestTheoryProperties:
    """Property-based tests across decision theories."""

    @given(payoff_tables, probabilities)
    def test_edt_and_nndt_agree(self, payoffs, accuracy):
        """Test that EDT and NNDT give the same verdict at equal accuracy."""
        problem = NewcombProblem(*payoffs, accuracy=accuracy)
        edt = expected_utilities(problem, Theory.EDT)
        nndt = expected_utilities(problem, Theory.NNDT)
        assert edt.expected == nndt.expected
        assert edt.recommended == nndt.recommended

    @given(payoff_tables, probabilities)
    def test_cdt_follows_dominance(self, payoffs, prior):
        """Test that CDT takes both boxes when that is better in either state."""
        two_full, one_full, two_empty, one_empty = payoffs
        problem = NewcombProblem(*payoffs, prior_full=prior)
        verdict = expected_utilities(problem, Theory.CDT)
        if two_full > one_full and two_empty > one_empty:
            assert verdict.recommended is Action.TWO

    @given(probabilities)
    def test_canonical_edt_threshold(self, accuracy):
        """Test that EDT one-boxes exactly above accuracy 1001/2000."""
        verdict = expected_utilities(canonical_problem(accuracy=accuracy), Theory.EDT)
        if accuracy > Fraction(1001, 2000):
            assert verdict.recommended is Action.ONE
        elif accuracy < Fraction(1001, 2000):
            assert verdict.recommended is Action.TWO
        else:
            assert verdict.tie

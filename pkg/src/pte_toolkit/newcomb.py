"""
Expected-utility calculator for Newcomb's problem.

Three decision theories are compared:

- CDT: the box content does not depend on the decision, P(FULL) = prior.
- EDT: the content is correlated with the decision,
  P(FULL | ONE) = P(EMPTY | TWO) = accuracy.
- NNDT: the content counterfactually depends on the decision,
  P(ONE > FULL) = P(TWO > EMPTY) = accuracy.
"""

import logging
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from .errors import InvalidProbabilityError
from .game import Rational, format_rational, to_rational

logger = logging.getLogger(__name__)


class Action(str, Enum):
    ONE = "ONE"
    TWO = "TWO"


class BoxState(str, Enum):
    FULL = "FULL"
    EMPTY = "EMPTY"


class Theory(str, Enum):
    CDT = "cdt"
    EDT = "edt"
    NNDT = "nndt"


def _probability(value: Any, name: str) -> Rational:
    try:
        p = to_rational(value)
    except ValueError as e:
        raise InvalidProbabilityError(f"{name} is not a rational number: {value!r}") from e
    if not 0 <= p <= 1:
        raise InvalidProbabilityError(f"{name} must lie in [0, 1], got {format_rational(p)}")
    return p


@dataclass(frozen=True)
class NewcombProblem:
    """Payoff table plus the probability parameters.

    Attributes:
        two_full: taking both boxes when the opaque box is full
        one_full: taking the opaque box only when it is full
        two_empty: taking both boxes when the opaque box is empty
        one_empty: taking the opaque box only when it is empty
        prior_full: P(FULL) used by CDT
        accuracy: probability the prediction matches the decision (EDT, NNDT)
    """

    two_full: Rational
    one_full: Rational
    two_empty: Rational
    one_empty: Rational
    prior_full: Rational = Fraction(1, 2)
    accuracy: Rational = 1

    def __post_init__(self):
        for name in ("two_full", "one_full", "two_empty", "one_empty"):
            try:
                object.__setattr__(self, name, to_rational(getattr(self, name)))
            except ValueError as e:
                raise InvalidProbabilityError(f"Invalid payoff {name}: {e}") from e
        object.__setattr__(self, "prior_full", _probability(self.prior_full, "prior_full"))
        object.__setattr__(self, "accuracy", _probability(self.accuracy, "accuracy"))

    def utility(self, action: Action, state: BoxState) -> Rational:
        table = {
            (Action.TWO, BoxState.FULL): self.two_full,
            (Action.ONE, BoxState.FULL): self.one_full,
            (Action.TWO, BoxState.EMPTY): self.two_empty,
            (Action.ONE, BoxState.EMPTY): self.one_empty,
        }
        return table[(Action(action), BoxState(state))]

    def with_parameter(self, theory: "Theory", value: Any) -> "NewcombProblem":
        """Copy with the parameter ``theory`` depends on replaced."""
        if Theory(theory) is Theory.CDT:
            return replace(self, prior_full=value)
        return replace(self, accuracy=value)


def canonical_problem(prior_full: Any = Fraction(1, 2), accuracy: Any = 1) -> NewcombProblem:
    """$1,001,000 / $1,000,000 / $1,000 / $0."""
    return NewcombProblem(
        two_full=1_001_000,
        one_full=1_000_000,
        two_empty=1_000,
        one_empty=0,
        prior_full=prior_full,
        accuracy=accuracy,
    )


@dataclass(frozen=True)
class TheoryVerdict:
    """Expected utilities under one theory; ``recommended`` is None on a tie."""

    theory: Theory
    expected: Dict[Action, Rational]
    recommended: Optional[Action]
    parameter: Optional[Rational] = None

    @property
    def tie(self) -> bool:
        return self.recommended is None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theory": self.theory.value,
            "expected": {a.value: format_rational(v) for a, v in self.expected.items()},
            "recommended": self.recommended.value if self.recommended else None,
            "parameter": None if self.parameter is None else format_rational(self.parameter),
        }


def _state_probabilities(problem: NewcombProblem, theory: Theory, action: Action):
    if theory is Theory.CDT:
        p_full = problem.prior_full
    elif action is Action.ONE:
        # EDT reads this as P(FULL | ONE), NNDT as P(ONE > FULL)
        p_full = problem.accuracy
    else:
        p_full = 1 - problem.accuracy
    return {BoxState.FULL: p_full, BoxState.EMPTY: 1 - p_full}


def expected_utilities(problem: NewcombProblem, theory: Theory) -> TheoryVerdict:
    """Expected utility of ONE and TWO under ``theory``, with the argmax."""
    theory = Theory(theory)
    expected: Dict[Action, Rational] = {}
    for action in (Action.ONE, Action.TWO):
        probabilities = _state_probabilities(problem, theory, action)
        total = sum(problem.utility(action, s) * p for s, p in probabilities.items())
        expected[action] = to_rational(Fraction(total))
    if expected[Action.ONE] > expected[Action.TWO]:
        recommended: Optional[Action] = Action.ONE
    elif expected[Action.TWO] > expected[Action.ONE]:
        recommended = Action.TWO
    else:
        recommended = None
    parameter = problem.prior_full if theory is Theory.CDT else problem.accuracy
    return TheoryVerdict(
        theory=theory, expected=expected, recommended=recommended, parameter=parameter
    )


def recommendation_sweep(
    problem: NewcombProblem, theory: Theory, grid: Sequence[Any]
) -> List[TheoryVerdict]:
    """One verdict per grid value, in grid order.

    The grid varies the prior for CDT and the accuracy for EDT and NNDT.

    Raises:
        InvalidProbabilityError: empty grid or a value outside [0, 1]
    """
    if not grid:
        raise InvalidProbabilityError("Parameter grid is empty")
    theory = Theory(theory)
    verdicts = [expected_utilities(problem.with_parameter(theory, v), theory) for v in grid]
    logger.info(f"Newcomb sweep: {theory.value} over {len(grid)} values")
    return verdicts

"""
pte-toolkit - Perfectly Transparent Equilibrium and related solution concepts.

Provides:
A) Exact games - normal-form games with rational payoffs, general position and symmetry checks
B) Solvers - PTE by iterated preemption, Nash, individual rationality, translucent
   candidates, minimax-rationalizability, Hofstadter equilibrium
C) Experiments - seeded random game streams, mass scans, Newcomb calculator,
   regression corpus
"""

from .analysis import classify, scan, verify_inclusions
from .equilibria import (
    SurvivorSet,
    hofstadter_equilibrium,
    individually_rational_set,
    nash_pure_set,
    restricted_maximin,
    translucent_set,
)
from .game import Game, is_general_position, is_symmetric, payoff
from .gamefile import parse_game, read_game, serialize_game, write_game
from .minimax import minimax_dominated, minimax_rationalizable
from .newcomb import NewcombProblem, Theory, expected_utilities
from .pte import Outcome, PteResult, pte_solve
from .sampler import SampleConfig, sample_game

__version__ = "0.2.0"
__all__ = [
    "Game",
    "payoff",
    "is_general_position",
    "is_symmetric",
    "SurvivorSet",
    "restricted_maximin",
    "individually_rational_set",
    "nash_pure_set",
    "hofstadter_equilibrium",
    "translucent_set",
    "pte_solve",
    "PteResult",
    "Outcome",
    "minimax_dominated",
    "minimax_rationalizable",
    "NewcombProblem",
    "Theory",
    "expected_utilities",
    "SampleConfig",
    "sample_game",
    "parse_game",
    "serialize_game",
    "read_game",
    "write_game",
    "classify",
    "verify_inclusions",
    "scan",
]

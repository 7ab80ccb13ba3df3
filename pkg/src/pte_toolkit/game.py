"""
Exact representation of finite normal-form games.

Payoffs are ordinal and exact: every value is an ``int`` or a reduced
``fractions.Fraction``, so comparisons are never disturbed by rounding.
Profiles are enumerated lexicographically with player 0's strategy varying
slowest; a profile's position in that order is its *index*.
"""

import itertools
import logging
import numbers
import re
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterator, List, Literal, Optional, Sequence, Tuple, Union

from .errors import InvalidGameError, SymmetryCheckUnsupported

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]
PayoffVector = Tuple[Rational, ...]
StrategyProfile = Tuple[int, ...]
DominanceMode = Literal["weak", "strict"]

MAX_SYMMETRY_PLAYERS = 8

_LABEL_RE = re.compile(r"^[^\s#,]+$")


def to_rational(value: Any) -> Rational:
    """Convert a payoff literal to an exact rational.

    Integers stay integers; everything else becomes a reduced Fraction, and
    integral Fractions collapse back to ``int``. Floats are read through
    their shortest decimal repr, so ``1.375`` becomes ``11/8`` and ``0.1``
    becomes ``1/10``.

    Raises:
        InvalidGameError: value is not a finite rational literal
    """
    if isinstance(value, bool):
        raise InvalidGameError(f"Not a payoff: {value!r}")
    if isinstance(value, int):
        return value
    try:
        if isinstance(value, float):
            result = Fraction(repr(value))
        elif isinstance(value, str):
            result = Fraction(value.strip())
        elif isinstance(value, (numbers.Rational, Decimal)):
            result = Fraction(value)
        elif isinstance(value, numbers.Integral):
            return int(value)
        else:
            raise TypeError(type(value).__name__)
    except (ValueError, TypeError, ZeroDivisionError, OverflowError) as e:
        raise InvalidGameError(f"Not an exact rational payoff: {value!r} ({e})") from e
    if result.denominator == 1:
        return int(result.numerator)
    return result


@dataclass(frozen=True)
class Game:
    """A finite game in normal form.

    Attributes:
        strategy_counts: number of strategies per player (|Σ_i|)
        payoffs: one payoff vector per profile, in lexicographic profile order
        strategy_labels: optional strategy names, one tuple per player
    """

    strategy_counts: Tuple[int, ...]
    payoffs: Tuple[PayoffVector, ...]
    strategy_labels: Optional[Tuple[Tuple[str, ...], ...]] = field(default=None)

    def __post_init__(self):
        counts = tuple(self.strategy_counts)
        if not counts:
            raise InvalidGameError("A game needs at least one player")
        for i, c in enumerate(counts):
            if isinstance(c, bool) or not isinstance(c, numbers.Integral) or c < 1:
                raise InvalidGameError(f"Player {i} needs a positive strategy count, got {c!r}")
        counts = tuple(int(c) for c in counts)
        expected = 1
        for c in counts:
            expected *= c
        payoffs = tuple(self.payoffs)
        if len(payoffs) != expected:
            raise InvalidGameError(
                f"Expected {expected} payoff vectors for strategies {counts}, got {len(payoffs)}"
            )
        n = len(counts)
        normalized = []
        for k, vector in enumerate(payoffs):
            vector = tuple(vector)
            if len(vector) != n:
                raise InvalidGameError(
                    f"Payoff vector {k} has {len(vector)} entries, expected {n}"
                )
            normalized.append(tuple(to_rational(v) for v in vector))
        labels = self.strategy_labels
        if labels is not None:
            labels = tuple(tuple(str(s) for s in player_labels) for player_labels in labels)
            if len(labels) != n:
                raise InvalidGameError(f"Expected labels for {n} players, got {len(labels)}")
            for i, player_labels in enumerate(labels):
                if len(player_labels) != counts[i]:
                    raise InvalidGameError(
                        f"Player {i} has {counts[i]} strategies but {len(player_labels)} labels"
                    )
                for label in player_labels:
                    if not _LABEL_RE.match(label):
                        raise InvalidGameError(f"Invalid strategy label: {label!r}")
                if len(set(player_labels)) != len(player_labels):
                    raise InvalidGameError(f"Duplicate strategy labels for player {i}")
        object.__setattr__(self, "strategy_counts", counts)
        object.__setattr__(self, "payoffs", tuple(normalized))
        object.__setattr__(self, "strategy_labels", labels)

    # Construction helpers

    @classmethod
    def from_matrix(
        cls,
        matrix: Sequence[Sequence[Sequence[Any]]],
        labels: Optional[Sequence[Sequence[str]]] = None,
    ) -> "Game":
        """Build a two-player game from ``matrix[row][column] = (u_row, u_column)``."""
        if not matrix or not matrix[0]:
            raise InvalidGameError("Empty payoff matrix")
        columns = len(matrix[0])
        payoffs: List[Tuple[Any, ...]] = []
        for r, row in enumerate(matrix):
            if len(row) != columns:
                raise InvalidGameError(f"Row {r} has {len(row)} cells, expected {columns}")
            payoffs.extend(tuple(cell) for cell in row)
        return cls(
            strategy_counts=(len(matrix), columns),
            payoffs=tuple(payoffs),
            strategy_labels=tuple(tuple(p) for p in labels) if labels is not None else None,
        )

    # Shape

    @property
    def player_count(self) -> int:
        return len(self.strategy_counts)

    @property
    def profile_count(self) -> int:
        return len(self.payoffs)

    @cached_property
    def strides(self) -> Tuple[int, ...]:
        """Index weight of each player's strategy (player 0 slowest)."""
        strides = [1] * self.player_count
        for i in range(self.player_count - 2, -1, -1):
            strides[i] = strides[i + 1] * self.strategy_counts[i + 1]
        return tuple(strides)

    @cached_property
    def profiles(self) -> Tuple[StrategyProfile, ...]:
        """All strategy profiles in lexicographic order."""
        return tuple(itertools.product(*(range(c) for c in self.strategy_counts)))

    def index_of(self, profile: Sequence[int]) -> int:
        """Position of a profile in the lexicographic enumeration."""
        self.validate_profile(profile)
        return sum(s * w for s, w in zip(profile, self.strides))

    def validate_profile(self, profile: Sequence[int]) -> None:
        if len(profile) != self.player_count:
            raise InvalidGameError(
                f"Profile {tuple(profile)} has {len(profile)} entries, "
                f"expected {self.player_count}"
            )
        for i, (s, c) in enumerate(zip(profile, self.strategy_counts)):
            if isinstance(s, bool) or not isinstance(s, numbers.Integral) or not 0 <= s < c:
                raise InvalidGameError(f"Strategy {s!r} of player {i} out of range 0..{c - 1}")

    def validate_player(self, player: int) -> None:
        if isinstance(player, bool) or not isinstance(player, numbers.Integral):
            raise InvalidGameError(f"Invalid player index {player!r}")
        if not 0 <= player < self.player_count:
            raise InvalidGameError(
                f"Player index {player} out of range 0..{self.player_count - 1}"
            )

    # Payoffs

    def payoff_vector(self, profile: Sequence[int]) -> PayoffVector:
        return self.payoffs[self.index_of(profile)]

    def payoff(self, profile: Sequence[int], player: int) -> Rational:
        self.validate_player(player)
        return self.payoff_vector(profile)[player]

    # Labels

    def strategy_label(self, player: int, strategy: int) -> str:
        if self.strategy_labels is None:
            return str(strategy)
        return self.strategy_labels[player][strategy]

    def profile_labels(self, profile: Sequence[int]) -> Tuple[str, ...]:
        return tuple(self.strategy_label(i, s) for i, s in enumerate(profile))


def format_rational(value: Rational) -> str:
    """Canonical text for a rational: integer, exact decimal, or ``p/q``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    denominator = value.denominator
    twos = fives = 0
    while denominator % 2 == 0:
        denominator //= 2
        twos += 1
    while denominator % 5 == 0:
        denominator //= 5
        fives += 1
    if denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    digits = max(twos, fives)
    scaled = abs(value.numerator) * 10**digits // value.denominator
    sign = "-" if value < 0 else ""
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def payoff(game: Game, profile: Sequence[int], player: int) -> Rational:
    """Return u_player(profile) exactly.

    Raises:
        InvalidGameError: profile or player index out of range
    """
    return game.payoff(profile, player)


@dataclass(frozen=True)
class TieReport:
    """Outcome of the general-position check; truthy when there are no ties."""

    general_position: bool
    player: Optional[int] = None
    profiles: Optional[Tuple[StrategyProfile, StrategyProfile]] = None

    def __bool__(self) -> bool:
        return self.general_position


def is_general_position(game: Game) -> TieReport:
    """Check that every player strictly ranks all profiles.

    On failure the first tie found (players in order, profiles in
    lexicographic order) is reported.
    """
    for player in range(game.player_count):
        seen: Dict[Rational, int] = {}
        for k, vector in enumerate(game.payoffs):
            value = vector[player]
            if value in seen:
                return TieReport(
                    general_position=False,
                    player=player,
                    profiles=(game.profiles[seen[value]], game.profiles[k]),
                )
            seen[value] = k
    return TieReport(general_position=True)


def is_symmetric(game: Game) -> bool:
    """True iff the game is invariant under every permutation of players.

    All strategy spaces must coincide, and reordering a profile's strategies
    reorders the payoffs with them: whoever ends up playing σ_i receives
    u_i(σ).

    Raises:
        SymmetryCheckUnsupported: more than MAX_SYMMETRY_PLAYERS players
    """
    n = game.player_count
    if n > MAX_SYMMETRY_PLAYERS:
        raise SymmetryCheckUnsupported(
            f"Symmetry check enumerates n! permutations; n={n} exceeds {MAX_SYMMETRY_PLAYERS}"
        )
    if len(set(game.strategy_counts)) != 1:
        return False
    strides = game.strides
    for perm in itertools.permutations(range(n)):
        if perm == tuple(range(n)):
            continue
        inverse = [0] * n
        for j, p in enumerate(perm):
            inverse[p] = j
        for k, profile in enumerate(game.profiles):
            permuted = sum(profile[perm[j]] * strides[j] for j in range(n))
            vector = game.payoffs[k]
            other = game.payoffs[permuted]
            for i in range(n):
                if vector[i] != other[inverse[i]]:
                    return False
    return True


def permute_players(game: Game, permutation: Sequence[int]) -> Game:
    """Relabel players: new player j is old player ``permutation[j]``."""
    n = game.player_count
    if sorted(permutation) != list(range(n)):
        raise InvalidGameError(f"Not a permutation of {n} players: {tuple(permutation)}")
    counts = tuple(game.strategy_counts[p] for p in permutation)
    payoffs = []
    for new_profile in itertools.product(*(range(c) for c in counts)):
        old_profile = [0] * n
        for j, p in enumerate(permutation):
            old_profile[p] = new_profile[j]
        vector = game.payoff_vector(old_profile)
        payoffs.append(tuple(vector[p] for p in permutation))
    labels = None
    if game.strategy_labels is not None:
        labels = tuple(game.strategy_labels[p] for p in permutation)
    return Game(strategy_counts=counts, payoffs=tuple(payoffs), strategy_labels=labels)


def dominates(a: Sequence[Rational], b: Sequence[Rational], mode: DominanceMode = "weak") -> bool:
    """Pareto dominance between payoff vectors.

    weak: every component of ``a`` is ≥ the one of ``b``.
    strict: weak, and at least one component is strictly greater.

    Raises:
        InvalidGameError: length mismatch or unknown mode
    """
    if len(a) != len(b):
        raise InvalidGameError(f"Payoff vectors differ in length: {len(a)} vs {len(b)}")
    if mode not in ("weak", "strict"):
        raise InvalidGameError(f"Unknown dominance mode: {mode!r}")
    if any(x < y for x, y in zip(a, b)):
        return False
    if mode == "weak":
        return True
    return any(x > y for x, y in zip(a, b))


def pareto_optimal_set(game: Game) -> FrozenSet[StrategyProfile]:
    """Profiles whose payoff vector no other profile strictly dominates."""
    optimal = []
    for k, vector in enumerate(game.payoffs):
        if not any(
            dominates(other, vector, "strict") for j, other in enumerate(game.payoffs) if j != k
        ):
            optimal.append(game.profiles[k])
    return frozenset(optimal)


def welfare_maximizing_set(game: Game) -> FrozenSet[StrategyProfile]:
    """Profiles maximizing the sum of all players' payoffs."""
    totals = [sum(vector) for vector in game.payoffs]
    best = max(totals)
    return frozenset(game.profiles[k] for k, t in enumerate(totals) if t == best)


def diagonal(game: Game) -> Iterator[StrategyProfile]:
    """Profiles (υ, ..., υ) for games whose players share one strategy count."""
    if len(set(game.strategy_counts)) != 1:
        return iter(())
    n = game.player_count
    return iter((s,) * n for s in range(game.strategy_counts[0]))


def break_ties(game: Game, seed: Optional[int] = None) -> Game:
    """Ordinal tie-breaking: replace each player's payoffs by ranks 1..|P|.

    Strict preferences are preserved. Ties are broken by profile order, or by
    a random order drawn from ``seed`` when given. The result is always in
    general position.
    """
    n_profiles = game.profile_count
    if seed is None:
        tiebreak = list(range(n_profiles))
    else:
        from .sampler import counter_generator

        rng = counter_generator(seed, 0)
        tiebreak = [int(x) for x in rng.permutation(n_profiles)]
    columns = []
    for player in range(game.player_count):
        order = sorted(range(n_profiles), key=lambda k: (game.payoffs[k][player], tiebreak[k]))
        ranks = [0] * n_profiles
        for rank, k in enumerate(order, start=1):
            ranks[k] = rank
        columns.append(ranks)
    payoffs = tuple(tuple(col[k] for col in columns) for k in range(n_profiles))
    logger.debug(f"break_ties: re-ranked {n_profiles} profiles (seed={seed})")
    return Game(
        strategy_counts=game.strategy_counts,
        payoffs=payoffs,
        strategy_labels=game.strategy_labels,
    )

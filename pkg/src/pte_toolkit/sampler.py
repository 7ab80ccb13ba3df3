"""
Seeded generation of random games in general position.

Every game is determined by ``(seed, index)`` alone: the pair is packed into
the 128-bit key of a Philox counter-based generator, so workers can draw any
slice of a sample stream without coordinating.

The draws follow numpy's Philox and ``Generator.permutation``; a numpy
release that changes either changes the stream. Scan records keep the game
text so ``analysis.replay_record`` notices.
"""

import logging
import os
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from .errors import InvalidGameError
from .game import Game

logger = logging.getLogger(__name__)

_WORD = 1 << 64


def default_seed() -> int:
    return int(os.getenv("PTE_DEFAULT_SEED", "0"))


def counter_generator(seed: int, index: int) -> np.random.Generator:
    """Generator keyed by ``(seed, index)``; both must fit in 64 bits."""
    if not 0 <= seed < _WORD:
        raise InvalidGameError(f"Seed must be an unsigned 64-bit integer, got {seed}")
    if not 0 <= index < _WORD:
        raise InvalidGameError(f"Index must be an unsigned 64-bit integer, got {index}")
    return np.random.Generator(np.random.Philox(key=seed * _WORD + index))


def _ranks(rng: np.random.Generator, size: int) -> Tuple[int, ...]:
    return tuple(int(v) + 1 for v in rng.permutation(size))


def parse_shape(text: str) -> Tuple[int, ...]:
    """Parse ``RxC`` (or ``AxBxC`` for more players) into strategy counts."""
    try:
        shape = tuple(int(part) for part in text.lower().split("x"))
    except ValueError as e:
        raise InvalidGameError(f"Invalid shape {text!r}, expected e.g. 3x3") from e
    if not shape or any(c < 1 for c in shape):
        raise InvalidGameError(f"Invalid shape {text!r}: strategy counts must be positive")
    return shape


@dataclass(frozen=True)
class SampleConfig:
    """What to sample.

    Attributes:
        shape: strategy counts per player
        count: number of games in the stream
        seed: 64-bit stream seed
        symmetric: draw symmetric two-player games
    """

    shape: Tuple[int, ...]
    count: int
    seed: int = 0
    symmetric: bool = False

    def __post_init__(self):
        object.__setattr__(self, "shape", tuple(int(c) for c in self.shape))
        if not self.shape or any(c < 1 for c in self.shape):
            raise InvalidGameError(f"Invalid shape {self.shape}: counts must be positive")
        if self.count < 1:
            raise InvalidGameError(f"Sample count must be positive, got {self.count}")
        if not 0 <= self.seed < _WORD:
            raise InvalidGameError(f"Seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.symmetric and (len(self.shape) != 2 or self.shape[0] != self.shape[1]):
            raise InvalidGameError(
                f"Symmetric sampling needs two players with equal strategy counts, got {self.shape}"
            )

    @property
    def shape_text(self) -> str:
        return "x".join(str(c) for c in self.shape)


def sample_game(config: SampleConfig, index: int) -> Game:
    """Game number ``index`` of the stream described by ``config``.

    Each player's payoffs are an independent uniform permutation of
    1..(number of profiles), so the game is in general position.
    """
    if not 0 <= index < config.count:
        raise InvalidGameError(f"Sample index {index} outside 0..{config.count - 1}")
    if config.symmetric:
        return sample_symmetric_game(config.shape[0], config.seed, index)
    rng = counter_generator(config.seed, index)
    size = 1
    for c in config.shape:
        size *= c
    columns = [_ranks(rng, size) for _ in config.shape]
    payoffs = tuple(tuple(col[k] for col in columns) for k in range(size))
    return Game(strategy_counts=config.shape, payoffs=payoffs)


def sample_symmetric_game(m: int, seed: int, index: int) -> Game:
    """Symmetric two-player m×m game with u_1(b, a) = u_0(a, b)."""
    if m < 1:
        raise InvalidGameError(f"Need at least one strategy, got {m}")
    rng = counter_generator(seed, index)
    row = _ranks(rng, m * m)
    payoffs = tuple((row[a * m + b], row[b * m + a]) for a in range(m) for b in range(m))
    return Game(strategy_counts=(m, m), payoffs=payoffs)


def iter_games(
    config: SampleConfig, start: int = 0, stop: Optional[int] = None
) -> Iterator[Tuple[int, Game]]:
    """Yield ``(index, game)`` for a slice of the stream."""
    stop = config.count if stop is None else min(stop, config.count)
    for index in range(start, stop):
        yield index, sample_game(config, index)


def config_from_args(
    shape: Sequence[int], count: int, seed: Optional[int] = None, symmetric: bool = False
) -> SampleConfig:
    """Build a config, falling back to ``PTE_DEFAULT_SEED`` for the seed."""
    return SampleConfig(
        shape=tuple(shape),
        count=count,
        seed=default_seed() if seed is None else seed,
        symmetric=symmetric,
    )

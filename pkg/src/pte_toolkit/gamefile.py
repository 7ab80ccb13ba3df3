"""
Plain-text game format.

    # prisoner's dilemma
    players: 2
    strategies: 2 2
    labels: Defect Cooperate
    labels: Defect Cooperate
    1 1
    3 0
    0 3
    2 2

Header lines come first and in this order: ``players``, ``strategies`` and
either no ``labels`` line or exactly one per player. Then one payoff line per
profile in lexicographic order (player 0 slowest), each holding one number
per player. Numbers are integers, decimals (``1.375``) or fractions
(``11/8``). ``#`` starts a comment; blank lines are ignored.

The canonical form written by ``serialize_game`` has no comments, integers
where possible, exact decimals when the denominator only has factors 2 and
5, and ``p/q`` otherwise.
"""

import logging
import re
from pathlib import Path
from typing import Iterator, List, Optional, Tuple, Union

from .errors import GameParseError, InvalidGameError
from .game import Game, format_rational, to_rational

logger = logging.getLogger(__name__)

_NUMBER_RE = re.compile(r"^-?(\d+(\.\d+)?|\d+/\d+)$")
_TOKEN_RE = re.compile(r"\S+")


def _lines(text: str) -> Iterator[Tuple[int, str]]:
    """Yield (line number, content) for non-blank lines with comments removed."""
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if content.strip():
            yield number, content


def _tokens(content: str) -> List[Tuple[int, str]]:
    return [(m.start() + 1, m.group()) for m in _TOKEN_RE.finditer(content)]


def _header(line: int, content: str, key: str) -> List[Tuple[int, str]]:
    tokens = _tokens(content)
    column, first = tokens[0]
    expected = f"{key}:"
    if first == expected:
        return tokens[1:]
    if first.startswith(expected):
        return [(column + len(expected), first[len(expected):])] + tokens[1:]
    raise GameParseError(f"expected '{expected}' header, found {first!r}", line, column)


def _positive_int(line: int, column: int, token: str, what: str) -> int:
    if not token.isdigit() or int(token) < 1:
        raise GameParseError(f"{what} must be a positive integer, found {token!r}", line, column)
    return int(token)


def parse_game(text: str) -> Game:
    """Parse game text into an exact Game.

    Raises:
        GameParseError: syntax error, wrong payoff count or invalid dimensions
    """
    lines = list(_lines(text))
    if not lines:
        raise GameParseError("empty game file", 1)
    cursor = 0

    line, content = lines[cursor]
    tokens = _header(line, content, "players")
    if len(tokens) != 1:
        raise GameParseError("'players:' takes exactly one value", line)
    players = _positive_int(line, tokens[0][0], tokens[0][1], "player count")
    cursor += 1

    if cursor >= len(lines):
        raise GameParseError("missing 'strategies:' header", line + 1)
    line, content = lines[cursor]
    tokens = _header(line, content, "strategies")
    if len(tokens) != players:
        raise GameParseError(
            f"'strategies:' needs {players} counts, found {len(tokens)}", line
        )
    counts = tuple(_positive_int(line, c, t, "strategy count") for c, t in tokens)
    cursor += 1

    labels: List[Tuple[str, ...]] = []
    while cursor < len(lines) and lines[cursor][1].lstrip().startswith("labels:"):
        line, content = lines[cursor]
        player = len(labels)
        if player >= players:
            raise GameParseError(f"more than {players} 'labels:' lines", line)
        tokens = _header(line, content, "labels")
        if len(tokens) != counts[player]:
            raise GameParseError(
                f"player {player} has {counts[player]} strategies, found {len(tokens)} labels",
                line,
            )
        labels.append(tuple(t for _, t in tokens))
        cursor += 1
    if labels and len(labels) != players:
        raise GameParseError(
            f"expected {players} 'labels:' lines, found {len(labels)}", lines[cursor - 1][0]
        )

    expected = 1
    for c in counts:
        expected *= c
    payoffs = []
    for line, content in lines[cursor:]:
        tokens = _tokens(content)
        if len(payoffs) == expected:
            raise GameParseError(f"too many payoff lines, expected {expected}", line)
        if len(tokens) != players:
            raise GameParseError(
                f"payoff line needs {players} values, found {len(tokens)}", line
            )
        vector = []
        for column, token in tokens:
            if not _NUMBER_RE.match(token):
                raise GameParseError(f"not a number: {token!r}", line, column)
            try:
                vector.append(to_rational(token))
            except InvalidGameError as e:
                raise GameParseError(str(e), line, column) from e
        payoffs.append(tuple(vector))
    if len(payoffs) != expected:
        last = lines[-1][0]
        raise GameParseError(
            f"expected {expected} payoff lines, found {len(payoffs)}", last + 1
        )

    try:
        return Game(
            strategy_counts=counts,
            payoffs=tuple(payoffs),
            strategy_labels=tuple(labels) if labels else None,
        )
    except GameParseError:
        raise
    except InvalidGameError as e:
        raise GameParseError(str(e), lines[0][0]) from e


def serialize_game(game: Game) -> str:
    """Canonical text of a game, newline-terminated."""
    out = [
        f"players: {game.player_count}",
        "strategies: " + " ".join(str(c) for c in game.strategy_counts),
    ]
    if game.strategy_labels is not None:
        out.extend("labels: " + " ".join(names) for names in game.strategy_labels)
    out.extend(" ".join(format_rational(v) for v in vector) for vector in game.payoffs)
    return "\n".join(out) + "\n"


def read_game(path: Union[str, Path]) -> Game:
    """Parse a game file."""
    path = Path(path)
    logger.debug(f"Reading game from {path}")
    return parse_game(path.read_text(encoding="utf-8"))


def write_game(game: Game, path: Union[str, Path], comment: Optional[str] = None) -> Path:
    """Write a game file; an optional comment goes on the first line."""
    path = Path(path)
    text = serialize_game(game)
    if comment:
        text = "".join(f"# {line}\n" for line in comment.splitlines()) + text
    path.write_text(text, encoding="utf-8")
    return path

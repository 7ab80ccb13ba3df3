"""
Line-delimited JSON records and human-readable summaries.

Every record is one JSON object per line, written with sorted keys and no
trailing spaces, so identical inputs give byte-identical files.
"""

import json
import logging
from pathlib import Path
from typing import IO, Any, Dict, Iterable, Iterator, List, Union

from .analysis import GameReport, ScanStats
from .game import Game, format_rational

logger = logging.getLogger(__name__)


def dumps_record(record: Dict[str, Any]) -> str:
    return json.dumps(record, sort_keys=True, ensure_ascii=False)


def write_records(records: Iterable[Dict[str, Any]], target: Union[str, Path, IO[str]]) -> int:
    """Write records as JSON lines to a path or an open text stream; return the count."""
    if isinstance(target, (str, Path)):
        with open(target, "w", encoding="utf-8", newline="\n") as handle:
            return write_records(records, handle)
    count = 0
    for record in records:
        target.write(dumps_record(record) + "\n")
        count += 1
    return count


def read_records(source: Union[str, Path]) -> List[Dict[str, Any]]:
    """Read a JSON-lines file, skipping blank lines."""
    return list(iter_records(Path(source).read_text(encoding="utf-8")))


def iter_records(text: str) -> Iterator[Dict[str, Any]]:
    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            yield json.loads(line)
        except json.JSONDecodeError as e:
            raise ValueError(f"line {number}: invalid record: {e}") from e


def game_record(
    report: GameReport, source: str = "", include_trace: bool = True
) -> Dict[str, Any]:
    record = {"kind": "classification", "source": source}
    record.update(report.to_dict(include_trace=include_trace))
    return record


def scan_record(stats: ScanStats, seed: int) -> Dict[str, Any]:
    record = {"kind": "scan", "seed": seed}
    record.update(stats.to_dict())
    return record


def _profile_text(game: Game, profile) -> str:
    labels = ",".join(game.profile_labels(profile))
    payoffs = ", ".join(format_rational(v) for v in game.payoff_vector(profile))
    return f"({labels}) = ({payoffs})"


def format_summary(report: GameReport) -> str:
    """Multi-line text summary of a classification."""
    game = report.game

    def listing(profiles) -> str:
        return "; ".join(_profile_text(game, p) for p in sorted(profiles)) or "none"

    lines = [
        f"shape: {'x'.join(str(c) for c in game.strategy_counts)}",
        f"general position: {'yes' if report.general_position else 'no'}",
        f"symmetric: {'unknown' if report.symmetric is None else report.symmetric}",
    ]
    if report.pte is not None:
        outcome = report.pte.outcome.value
        lines.append(f"PTE ({report.pte.mode}): {outcome} {listing(report.pte.survivors)}")
    else:
        lines.append(f"PTE: {type(report.pte_error).__name__}: {report.pte_error}")
    lines.append(f"Nash: {listing(report.nash)}")
    lines.append(f"individually rational: {listing(report.individually_rational)}")
    lines.append(f"translucent: {listing(report.translucent)}")
    lines.append(f"Pareto-optimal: {listing(report.pareto_optimal)}")
    active = report.minimax.to_dict(game)["active"]
    lines.append("minimax-rationalizable: " + " x ".join("{" + ",".join(a) + "}" for a in active))
    if report.hofstadter is not None:
        lines.append(f"Hofstadter: {_profile_text(game, report.hofstadter)}")
    else:
        lines.append(f"Hofstadter: {type(report.hofstadter_error).__name__}")
    lines.append(f"social dilemma: {'yes' if report.social_dilemma else 'no'}")
    if report.violations:
        lines.append("VIOLATIONS:")
        lines.extend(f"  {v.check}: {v.detail}" for v in report.violations)
    return "\n".join(lines)

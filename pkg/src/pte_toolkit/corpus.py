"""
Regression corpus of published example games with their expected results.

The corpus lives in ``corpus_data/`` inside the package (or in the directory
named by ``PTE_CORPUS_DIR``): one ``.game`` file per game plus
``expectations.jsonl``, one record per entry. Each ``expected`` block maps a
concept name to the fields its solver output must match. Two extra keys are
understood: ``pte_strict`` (the PTE solved in strict mode regardless of the
entry's ``lenient`` flag) and ``report`` (fields of the classification
record).
"""

import logging
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from .analysis import classify
from .concepts import solve_concept
from .errors import CorpusError, PteToolkitError
from .game import Game
from .gamefile import parse_game
from .newcomb import NewcombProblem, expected_utilities
from .reports import iter_records

logger = logging.getLogger(__name__)

EXPECTATIONS_FILE = "expectations.jsonl"


@dataclass
class CorpusEntry:
    """One corpus record; ``game`` is None for Newcomb entries."""

    name: str
    kind: str
    reference: str
    record: Dict[str, Any]
    game: Optional[Game] = None
    lenient: bool = False

    @property
    def expected(self) -> Dict[str, Any]:
        return self.record.get("expected", {})

    @property
    def provenance(self) -> Dict[str, str]:
        return self.record.get("provenance", {})


@dataclass
class CorpusOutcome:
    name: str
    passed: bool
    mismatches: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "mismatches": self.mismatches}


def corpus_dir(path: Optional[Union[str, Path]] = None) -> Path:
    """Resolve the corpus location: argument, then ``PTE_CORPUS_DIR``, then package data."""
    chosen = path or os.getenv("PTE_CORPUS_DIR")
    if chosen:
        return Path(chosen)
    return Path(str(resources.files("pte_toolkit") / "corpus_data"))


def load_corpus(path: Optional[Union[str, Path]] = None) -> List[CorpusEntry]:
    """Read every entry and parse its game file.

    Raises:
        CorpusError: the expectations file or a game file is missing or unreadable
    """
    directory = corpus_dir(path)
    index = directory / EXPECTATIONS_FILE
    try:
        records = list(iter_records(index.read_text(encoding="utf-8")))
    except (OSError, ValueError) as e:
        raise CorpusError(f"Cannot read corpus index {index}: {e}") from e
    entries = []
    for record in records:
        entry = CorpusEntry(
            name=record["name"],
            kind=record.get("kind", "game"),
            reference=record.get("reference", ""),
            record=record,
            lenient=bool(record.get("lenient", False)),
        )
        if entry.kind == "game":
            game_path = directory / record["file"]
            try:
                entry.game = parse_game(game_path.read_text(encoding="utf-8"))
            except OSError as e:
                raise CorpusError(f"Missing corpus game {game_path}: {e}") from e
        entries.append(entry)
    logger.info(f"Loaded {len(entries)} corpus entries from {directory}")
    return entries


def _compare(prefix: str, expected: Dict[str, Any], actual: Dict[str, Any]) -> List[str]:
    return [
        f"{prefix}.{key}: expected {value!r}, got {actual.get(key)!r}"
        for key, value in expected.items()
        if actual.get(key) != value
    ]


def check_game_entry(entry: CorpusEntry) -> List[str]:
    """Mismatches between an entry's expectations and the solvers' output."""
    game = entry.game
    mismatches: List[str] = []
    for concept, expected in entry.expected.items():
        if concept == "report":
            actual = classify(game, lenient=entry.lenient).to_dict(include_trace=False)
        elif concept == "pte_strict":
            actual = solve_concept(game, "pte", lenient=False)
        else:
            actual = solve_concept(game, concept, lenient=entry.lenient)
        mismatches.extend(_compare(concept, expected, actual))
    return mismatches


def check_newcomb_entry(entry: CorpusEntry) -> List[str]:
    two_full, one_full, two_empty, one_empty = entry.record["payoffs"]
    base = NewcombProblem(
        two_full=two_full, one_full=one_full, two_empty=two_empty, one_empty=one_empty
    )
    mismatches: List[str] = []
    for k, check in enumerate(entry.record.get("checks", [])):
        problem = base.with_parameter(check["theory"], check["parameter"])
        verdict = expected_utilities(problem, check["theory"]).to_dict()
        actual = {"expected": verdict["expected"], "recommended": verdict["recommended"]}
        wanted = {key: check[key] for key in ("expected", "recommended") if key in check}
        mismatches.extend(_compare(f"checks[{k}]", wanted, actual))
    return mismatches


def run_entry(entry: CorpusEntry) -> CorpusOutcome:
    try:
        if entry.kind == "newcomb":
            mismatches = check_newcomb_entry(entry)
        else:
            mismatches = check_game_entry(entry)
    except PteToolkitError as e:
        mismatches = [f"{type(e).__name__}: {e}"]
    outcome = CorpusOutcome(name=entry.name, passed=not mismatches, mismatches=mismatches)
    if outcome.passed:
        logger.info(f"Corpus entry {entry.name}: pass")
    else:
        logger.info(f"Corpus entry {entry.name}: FAIL ({len(mismatches)} mismatches)")
    return outcome


def run_corpus(
    path: Optional[Union[str, Path]] = None, entries: Optional[List[CorpusEntry]] = None
) -> List[CorpusOutcome]:
    """Solve every corpus entry and compare with its expectations."""
    if entries is None:
        entries = load_corpus(path)
    return [run_entry(entry) for entry in entries]

"""
Per-game classification, theorem checks and seeded mass scans.
"""

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from .equilibria import (
    hofstadter_equilibrium,
    individually_rational_set,
    nash_pure_set,
    translucent_set,
)
from .errors import InvariantViolation, SolverPreconditionError
from .game import (
    Game,
    StrategyProfile,
    TieReport,
    dominates,
    format_rational,
    is_general_position,
    is_symmetric,
    pareto_optimal_set,
    welfare_maximizing_set,
)
from .gamefile import parse_game, serialize_game
from .minimax import MinimaxResult, minimax_rationalizable
from .pte import PteResult, pte_solve
from .sampler import SampleConfig, sample_game

logger = logging.getLogger(__name__)

PTE_RATE_BAND = (0.65, 0.85)
MAX_NOT_MINIMAX_RATE = 0.01


@dataclass(frozen=True)
class Violation:
    """A property that holds by theorem but failed on a concrete game."""

    check: str
    detail: str

    def to_dict(self) -> Dict[str, str]:
        return {"check": self.check, "detail": self.detail}


@dataclass
class GameReport:
    """Every solution concept evaluated on one game."""

    game: Game
    ties: TieReport
    symmetric: Optional[bool]
    nash: FrozenSet[StrategyProfile]
    individually_rational: FrozenSet[StrategyProfile]
    translucent: FrozenSet[StrategyProfile]
    pareto_optimal: FrozenSet[StrategyProfile]
    welfare_maximizing: FrozenSet[StrategyProfile]
    minimax: MinimaxResult
    pte: Optional[PteResult]
    pte_error: Optional[SolverPreconditionError]
    hofstadter: Optional[StrategyProfile]
    hofstadter_error: Optional[SolverPreconditionError]
    social_dilemma: bool
    violations: List[Violation] = field(default_factory=list)

    @property
    def general_position(self) -> bool:
        return bool(self.ties)

    @property
    def pte_profile(self) -> Optional[StrategyProfile]:
        return self.pte.profile if self.pte is not None else None

    @property
    def pte_is_nash(self) -> Optional[bool]:
        p = self.pte_profile
        return None if p is None else p in self.nash

    @property
    def pte_pareto_dominates_nash(self) -> Optional[bool]:
        """PTE strictly Pareto-dominates at least one pure Nash equilibrium."""
        p = self.pte_profile
        if p is None:
            return None
        vector = self.game.payoff_vector(p)
        return any(dominates(vector, self.game.payoff_vector(q), "strict") for q in self.nash)

    @property
    def pte_minimax_rationalizable(self) -> Optional[bool]:
        p = self.pte_profile
        return None if p is None else self.minimax.is_rationalizable(p)

    def to_dict(self, include_trace: bool = True) -> Dict[str, Any]:
        game = self.game

        def profiles(items) -> List[List[int]]:
            return [list(p) for p in sorted(items)]

        def error(e: Optional[Exception]) -> Optional[Dict[str, str]]:
            return None if e is None else {"error": type(e).__name__, "message": str(e)}

        return {
            "shape": list(game.strategy_counts),
            "general_position": self.general_position,
            "tie": None
            if self.general_position
            else {"player": self.ties.player, "profiles": [list(p) for p in self.ties.profiles]},
            "symmetric": self.symmetric,
            "nash": profiles(self.nash),
            "individually_rational": profiles(self.individually_rational),
            "translucent": profiles(self.translucent),
            "pareto_optimal": profiles(self.pareto_optimal),
            "welfare_maximizing": profiles(self.welfare_maximizing),
            "minimax": self.minimax.to_dict(game),
            "pte": self.pte.to_dict(game, include_trace) if self.pte else error(self.pte_error),
            "hofstadter": list(self.hofstadter)
            if self.hofstadter is not None
            else error(self.hofstadter_error),
            "social_dilemma": self.social_dilemma,
            "pte_is_nash": self.pte_is_nash,
            "pte_pareto_dominates_nash": self.pte_pareto_dominates_nash,
            "pte_minimax_rationalizable": self.pte_minimax_rationalizable,
            "violations": [v.to_dict() for v in self.violations],
        }


def is_social_dilemma(game: Game) -> bool:
    """Exactly one pure Nash equilibrium and exactly one profile strictly dominating it."""
    nash = nash_pure_set(game)
    if len(nash) != 1:
        return False
    target = game.payoff_vector(next(iter(nash)))
    improvements = sum(1 for vector in game.payoffs if dominates(vector, target, "strict"))
    return improvements == 1


def _symmetry(game: Game) -> Optional[bool]:
    try:
        return is_symmetric(game)
    except SolverPreconditionError:
        return None


def classify(game: Game, lenient: bool = False) -> GameReport:
    """Run every solver on ``game``.

    Solver preconditions (ties in strict mode, asymmetry for Hofstadter)
    become report fields instead of exceptions. The report's ``violations``
    are filled by ``verify_inclusions``.
    """
    ties = is_general_position(game)
    pte: Optional[PteResult] = None
    pte_error: Optional[SolverPreconditionError] = None
    try:
        pte = pte_solve(game, "lenient" if lenient else "strict")
    except InvariantViolation as e:
        logger.warning(f"Uniqueness failed, re-solving leniently: {e}")
        pte = pte_solve(game, "lenient")
    except SolverPreconditionError as e:
        pte_error = e

    hofstadter: Optional[StrategyProfile] = None
    hofstadter_error: Optional[SolverPreconditionError] = None
    try:
        hofstadter = hofstadter_equilibrium(game)
    except SolverPreconditionError as e:
        hofstadter_error = e

    nash = nash_pure_set(game)
    report = GameReport(
        game=game,
        ties=ties,
        symmetric=_symmetry(game),
        nash=nash,
        individually_rational=individually_rational_set(game).profile_set(game),
        translucent=translucent_set(game).profile_set(game),
        pareto_optimal=pareto_optimal_set(game),
        welfare_maximizing=welfare_maximizing_set(game),
        minimax=minimax_rationalizable(game),
        pte=pte,
        pte_error=pte_error,
        hofstadter=hofstadter,
        hofstadter_error=hofstadter_error,
        social_dilemma=is_social_dilemma(game),
    )
    report.violations = verify_inclusions(game, report)
    return report


def verify_inclusions(
    game: Game, report: Optional[GameReport] = None, lenient: bool = False
) -> List[Violation]:
    """Check the proven inclusions on one game and return every failure.

    Checks: at most one PTE survivor under general position; the PTE is
    Pareto-optimal and individually rational; Nash ⊆ IR ⊆ translucent; the
    elimination trace is monotone and replays. On symmetric games in general
    position also: PTE = Hofstadter, Hofstadter is individually rational and
    minimax-rationalizable.
    """
    if report is None:
        return classify(game, lenient=lenient).violations
    found: List[Violation] = []
    pte = report.pte
    if pte is not None:
        if report.general_position and len(pte.survivors) > 1:
            found.append(Violation("pte_unique", f"{len(pte.survivors)} survivors"))
        p = pte.profile
        if p is not None:
            if report.general_position and p not in report.pareto_optimal:
                found.append(Violation("pte_pareto_optimal", f"{p} is Pareto-dominated"))
            if p not in report.individually_rational:
                found.append(Violation("pte_individually_rational", f"{p} is not IR"))
        if not pte.trace.maximins_monotone():
            found.append(Violation("maximin_monotone", f"maximins {pte.trace.maximins}"))
        if not pte.trace.replays(game):
            found.append(Violation("trace_replay", "elimination trace does not replay"))
    outside = report.nash - report.individually_rational
    if outside:
        found.append(Violation("nash_subset_ir", f"Nash profiles not IR: {sorted(outside)}"))
    outside = report.individually_rational - report.translucent
    if outside:
        found.append(
            Violation("ir_subset_translucent", f"IR profiles not translucent: {sorted(outside)}")
        )
    h = report.hofstadter
    if report.symmetric and report.general_position and h is not None:
        p = report.pte_profile
        if p is not None and p != h:
            found.append(Violation("pte_equals_hofstadter", f"PTE {p} vs Hofstadter {h}"))
        if h not in report.individually_rational:
            found.append(Violation("hofstadter_individually_rational", f"{h} is not IR"))
        if not report.minimax.is_rationalizable(h):
            found.append(
                Violation("hofstadter_minimax_rationalizable", f"{h} is not rationalizable")
            )
    return found


@dataclass
class ScanStats:
    """Counts aggregated over a scan; merging is associative and order-free."""

    shape: Tuple[int, ...]
    symmetric: bool = False
    games: int = 0
    general_position: int = 0
    pte_exists: int = 0
    pte_not_minimax: int = 0
    pte_is_nash: int = 0
    pte_dominates_nash: int = 0
    social_dilemmas: int = 0
    violations: int = 0
    records: List[Dict[str, Any]] = field(default_factory=list)

    def merge(self, other: "ScanStats") -> "ScanStats":
        self.games += other.games
        self.general_position += other.general_position
        self.pte_exists += other.pte_exists
        self.pte_not_minimax += other.pte_not_minimax
        self.pte_is_nash += other.pte_is_nash
        self.pte_dominates_nash += other.pte_dominates_nash
        self.social_dilemmas += other.social_dilemmas
        self.violations += other.violations
        self.records.extend(other.records)
        return self

    @property
    def pte_rate(self) -> float:
        return self.pte_exists / self.games if self.games else 0.0

    @property
    def not_minimax_rate(self) -> float:
        return self.pte_not_minimax / self.pte_exists if self.pte_exists else 0.0

    def band_diagnostics(self) -> List[str]:
        """Deviations from the indicative statistics of 3x3 scans."""
        if self.shape != (3, 3) or self.symmetric or not self.games:
            return []
        problems = []
        low, high = PTE_RATE_BAND
        if not low <= self.pte_rate <= high:
            problems.append(
                f"PTE rate {self.pte_rate:.4f} outside indicative band [{low}, {high}]"
            )
        if self.not_minimax_rate >= MAX_NOT_MINIMAX_RATE:
            problems.append(
                f"PTE-not-minimax-rationalizable rate {self.not_minimax_rate:.4f} "
                f">= {MAX_NOT_MINIMAX_RATE}"
            )
        return problems

    def to_dict(self) -> Dict[str, Any]:
        return {
            "shape": list(self.shape),
            "symmetric": self.symmetric,
            "games": self.games,
            "general_position": self.general_position,
            "pte_exists": self.pte_exists,
            "pte_not_minimax_rationalizable": self.pte_not_minimax,
            "pte_is_nash": self.pte_is_nash,
            "pte_pareto_dominates_nash": self.pte_dominates_nash,
            "social_dilemmas": self.social_dilemmas,
            "violations": self.violations,
            "pte_rate": _rate(self.pte_exists, self.games),
            "pte_not_minimax_rate": _rate(self.pte_not_minimax, self.pte_exists),
            "counterexamples": len(self.records),
        }


def _rate(numerator: int, denominator: int) -> str:
    """Rate rendered with a fixed six decimals so reports stay byte-stable."""
    if not denominator:
        return "0.000000"
    return f"{numerator / denominator:.6f}"


def _record(config: SampleConfig, index: int, kind: str, report: GameReport) -> Dict[str, Any]:
    game = report.game
    record: Dict[str, Any] = {
        "kind": kind,
        "seed": config.seed,
        "index": index,
        "shape": list(config.shape),
        "symmetric": config.symmetric,
        "game": serialize_game(game),
    }
    if report.pte_profile is not None:
        record["pte"] = list(report.pte_profile)
        record["pte_payoffs"] = [format_rational(v) for v in game.payoff_vector(report.pte_profile)]
    record["minimax_active"] = [sorted(a) for a in report.minimax.active]
    if report.violations:
        record["violations"] = [v.to_dict() for v in report.violations]
    return record


def scan_range(config: SampleConfig, start: int, stop: int) -> ScanStats:
    """Classify games ``start..stop-1`` of the stream."""
    stats = ScanStats(shape=config.shape, symmetric=config.symmetric)
    for index in range(start, stop):
        report = classify(sample_game(config, index))
        stats.games += 1
        stats.general_position += report.general_position
        stats.social_dilemmas += report.social_dilemma
        if report.pte_profile is not None:
            stats.pte_exists += 1
            stats.pte_is_nash += bool(report.pte_is_nash)
            stats.pte_dominates_nash += bool(report.pte_pareto_dominates_nash)
            if not report.pte_minimax_rationalizable:
                stats.pte_not_minimax += 1
                stats.records.append(
                    _record(config, index, "pte_not_minimax_rationalizable", report)
                )
        if report.violations:
            stats.violations += 1
            stats.records.append(_record(config, index, "violation", report))
    return stats


def _chunks(count: int, chunk_size: int) -> List[Tuple[int, int]]:
    return [(start, min(start + chunk_size, count)) for start in range(0, count, chunk_size)]


def _scan_chunk(args: Tuple[SampleConfig, int, int]) -> ScanStats:
    config, start, stop = args
    return scan_range(config, start, stop)


def scan(
    config: SampleConfig,
    workers: Optional[int] = None,
    chunk_size: Optional[int] = None,
) -> ScanStats:
    """Classify every game of the stream and aggregate the counts.

    Args:
        config: the sample stream
        workers: worker processes (default ``PTE_SCAN_WORKERS`` or 1)
        chunk_size: games per task (default ``PTE_SCAN_CHUNK_SIZE`` or 2000)

    Returns:
        ScanStats whose records are sorted by (index, kind); identical for
        any worker count
    """
    if workers is None:
        workers = int(os.getenv("PTE_SCAN_WORKERS", "1"))
    if chunk_size is None:
        chunk_size = int(os.getenv("PTE_SCAN_CHUNK_SIZE", "2000"))
    if workers < 1 or chunk_size < 1:
        raise ValueError("workers and chunk_size must be positive")
    chunks = _chunks(config.count, chunk_size)
    logger.info(
        f"Scanning {config.count} {config.shape_text} games (seed={config.seed}, "
        f"{len(chunks)} chunks, {workers} workers)"
    )
    total = ScanStats(shape=config.shape, symmetric=config.symmetric)
    tasks = [(config, start, stop) for start, stop in chunks]
    if workers == 1:
        results = map(_scan_chunk, tasks)
        for k, partial in enumerate(results, start=1):
            total.merge(partial)
            logger.info(f"Chunk {k}/{len(chunks)} done ({total.games} games)")
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for k, partial in enumerate(executor.map(_scan_chunk, tasks), start=1):
                total.merge(partial)
                logger.info(f"Chunk {k}/{len(chunks)} done ({total.games} games)")
    total.records.sort(key=lambda r: (r["index"], r["kind"]))
    for problem in total.band_diagnostics():
        logger.warning(problem)
    return total


def replay_record(record: Dict[str, Any]) -> bool:
    """Regenerate a scan record's game from (seed, index) and re-check its kind."""
    config = SampleConfig(
        shape=tuple(record["shape"]),
        count=record["index"] + 1,
        seed=record["seed"],
        symmetric=record.get("symmetric", False),
    )
    game = sample_game(config, record["index"])
    if game != parse_game(record["game"]):
        return False
    report = classify(game)
    if record["kind"] == "pte_not_minimax_rationalizable":
        return (
            report.pte_profile is not None
            and list(report.pte_profile) == record.get("pte")
            and report.pte_minimax_rationalizable is False
        )
    if record["kind"] == "violation":
        return bool(report.violations)
    return False

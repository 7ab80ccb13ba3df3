"""
Command-line interface.

    pte-toolkit solve GAME --concept pte|nash|ir|te|minimax|hofstadter|pareto|welfare|all
    pte-toolkit classify GAME [--format text|records]
    pte-toolkit sample --shape 3x3 --count N --seed S --out DIR [--symmetric]
    pte-toolkit scan --shape 3x3 --count N --seed S [--workers W] --report F --counterexamples F
    pte-toolkit verify GAME
    pte-toolkit newcomb --theory cdt|edt|nndt [--prior P] [--accuracy Q] [--sweep ...]
    pte-toolkit corpus [--dir DIR]

solve, classify and verify accept --break-ties [SEED] to rank payoffs ordinally first.

Exit codes: 0 success, 1 solver precondition or invariant violated, 2 input error.
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from .analysis import classify, scan, verify_inclusions
from .concepts import CONCEPTS, get_concept, solve_all
from .corpus import run_corpus
from .errors import InvariantViolation, PteToolkitError, SolverPreconditionError
from .game import Game, break_ties
from .gamefile import read_game, write_game
from .newcomb import (
    NewcombProblem,
    Theory,
    canonical_problem,
    expected_utilities,
    recommendation_sweep,
)
from .reports import dumps_record, format_summary, game_record, scan_record, write_records
from .sampler import config_from_args, iter_games, parse_shape

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_INPUT = 2


def _format_concept(name: str, result: Dict[str, Any], trace: bool = False) -> str:
    if "error" in result:
        return f"{name}: {result['error']}: {result.get('message', '')}"
    cells = [
        f"({profile}) = ({', '.join(payoffs)})"
        for profile, payoffs in zip(result["profiles"], result["payoffs"])
    ]
    head = f"{name}: "
    if name == "pte":
        head += f"{result['outcome']} "
    line = head + ("; ".join(cells) or "none")
    if name == "minimax":
        line += "  active: " + " x ".join("{" + ",".join(a) + "}" for a in result["active"])
    if trace and name == "pte":
        rows = [line]
        for k, (maximin, dropped) in enumerate(
            zip(result["maximins"], result["eliminated"]), start=1
        ):
            rows.append(
                f"  round {k}: maximin ({', '.join(maximin)}); "
                f"eliminated {' '.join(dropped) or '-'}"
            )
            for w in result["witnesses"][k - 1]:
                rows.append(
                    f"    {w['profile']} preempted by player {w['player']} via {w['strategy']}"
                )
        return "\n".join(rows)
    return line


def _read(args: argparse.Namespace) -> Game:
    game = read_game(args.game)
    if args.break_ties is None:
        return game
    seed = None if args.break_ties == "order" else int(args.break_ties)
    return break_ties(game, seed)


def cmd_solve(args: argparse.Namespace) -> int:
    game = _read(args)
    if args.concept == "all":
        results = solve_all(game, lenient=args.lenient)
    else:
        results = {args.concept: get_concept(args.concept).solve(game, lenient=args.lenient)}
    if args.format == "records":
        for result in results.values():
            print(dumps_record({"kind": "solution", "source": args.game, **result}))
    else:
        for name, result in results.items():
            print(_format_concept(name, result, trace=args.trace))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    game = _read(args)
    report = classify(game, lenient=args.lenient)
    if args.format == "records":
        print(dumps_record(game_record(report, source=args.game)))
    else:
        print(format_summary(report))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    game = _read(args)
    violations = verify_inclusions(game, lenient=args.lenient)
    if not violations:
        print("all inclusions hold")
        return EXIT_OK
    for v in violations:
        print(f"VIOLATION {v.check}: {v.detail}")
    return EXIT_PRECONDITION


def cmd_sample(args: argparse.Namespace) -> int:
    config = config_from_args(parse_shape(args.shape), args.count, args.seed, args.symmetric)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    width = max(6, len(str(max(config.count - 1, 0))))
    for index, game in iter_games(config):
        write_game(
            game,
            out / f"game_{index:0{width}d}.game",
            comment=f"seed {config.seed} index {index} shape {config.shape_text}",
        )
    print(f"wrote {config.count} games to {out}")
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    config = config_from_args(parse_shape(args.shape), args.count, args.seed, args.symmetric)
    stats = scan(config, workers=args.workers, chunk_size=args.chunk_size)
    write_records([scan_record(stats, config.seed)], args.report)
    if args.counterexamples:
        write_records(stats.records, args.counterexamples)
    print(
        f"games: {stats.games}  PTE: {stats.pte_exists} ({stats.pte_rate:.4f})  "
        f"PTE not minimax-rationalizable: {stats.pte_not_minimax}  "
        f"social dilemmas: {stats.social_dilemmas}  violations: {stats.violations}"
    )
    for problem in stats.band_diagnostics():
        sys.stderr.write(f"warning: {problem}\n")
    return EXIT_PRECONDITION if stats.violations else EXIT_OK


def _split(values: Optional[str]) -> List[str]:
    return [v.strip() for v in values.split(",") if v.strip()] if values else []


def cmd_newcomb(args: argparse.Namespace) -> int:
    problem = canonical_problem()
    if args.payoffs:
        values = _split(args.payoffs)
        if len(values) != 4:
            raise ValueError("--payoffs takes four values: two-full,one-full,two-empty,one-empty")
        problem = NewcombProblem(*values)
    if args.prior is not None:
        problem = problem.with_parameter(Theory.CDT, args.prior)
    if args.accuracy is not None:
        problem = problem.with_parameter(Theory.EDT, args.accuracy)
    theory = Theory(args.theory)
    if args.sweep is not None:
        verdicts = recommendation_sweep(problem, theory, _split(args.sweep))
    else:
        verdicts = [expected_utilities(problem, theory)]
    for verdict in verdicts:
        if args.format == "records":
            print(dumps_record({"kind": "newcomb", **verdict.to_dict()}))
        else:
            data = verdict.to_dict()
            print(
                f"{data['theory']} (parameter {data['parameter']}): "
                f"E[ONE] = {data['expected']['ONE']}, E[TWO] = {data['expected']['TWO']}, "
                f"recommend {data['recommended'] or 'either (tie)'}"
            )
    return EXIT_OK


def cmd_corpus(args: argparse.Namespace) -> int:
    outcomes = run_corpus(args.dir)
    failed = 0
    for outcome in outcomes:
        print(f"{'PASS' if outcome.passed else 'FAIL'} {outcome.name}")
        for mismatch in outcome.mismatches:
            print(f"    {mismatch}")
        failed += not outcome.passed
    print(f"{len(outcomes) - failed}/{len(outcomes)} entries pass")
    return EXIT_PRECONDITION if failed else EXIT_OK


def _add_game_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument("game", help="game file")
    p.add_argument(
        "--break-ties",
        nargs="?",
        const="order",
        metavar="SEED",
        help="re-rank payoffs ordinally; ties by profile order or by a seeded order",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pte-toolkit",
        description="Perfectly Transparent Equilibrium and related solution concepts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="Solve a game file for one or all concepts")
    _add_game_arguments(p)
    p.add_argument("--concept", choices=[*CONCEPTS, "all"], default="pte")
    p.add_argument("--lenient", action="store_true", help="accept games with ties")
    p.add_argument("--trace", action="store_true", help="show PTE elimination rounds")
    p.add_argument("--format", choices=["text", "records"], default="text")
    p.set_defaults(handler=cmd_solve)

    p = sub.add_parser("classify", help="Run every solver and the theorem checks")
    _add_game_arguments(p)
    p.add_argument("--lenient", action="store_true")
    p.add_argument("--format", choices=["text", "records"], default="text")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("verify", help="Check the proven inclusions on a game")
    _add_game_arguments(p)
    p.add_argument("--lenient", action="store_true")
    p.set_defaults(handler=cmd_verify)

    for name, handler, help_text in (
        ("sample", cmd_sample, "Write seeded random games to a directory"),
        ("scan", cmd_scan, "Classify a seeded stream of random games"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--shape", default="3x3", help="strategy counts, e.g. 3x3")
        p.add_argument("--count", type=int, required=True)
        p.add_argument("--seed", type=int, default=None, help="default: PTE_DEFAULT_SEED or 0")
        p.add_argument("--symmetric", action="store_true")
        p.set_defaults(handler=handler)
        if name == "sample":
            p.add_argument("--out", required=True, help="output directory")
        else:
            p.add_argument("--workers", type=int, default=None)
            p.add_argument("--chunk-size", type=int, default=None)
            p.add_argument("--report", required=True, help="JSON-lines statistics file")
            p.add_argument("--counterexamples", help="JSON-lines counterexample file")

    p = sub.add_parser("newcomb", help="Expected utilities in Newcomb's problem")
    p.add_argument("--theory", choices=[t.value for t in Theory], required=True)
    p.add_argument("--prior", help="P(FULL) for CDT, default 1/2")
    p.add_argument("--accuracy", help="prediction accuracy for EDT/NNDT, default 1")
    p.add_argument("--payoffs", help="two-full,one-full,two-empty,one-empty")
    p.add_argument("--sweep", help="comma-separated prior (CDT) or accuracy values")
    p.add_argument("--format", choices=["text", "records"], default="text")
    p.set_defaults(handler=cmd_newcomb)

    p = sub.add_parser("corpus", help="Run the regression corpus")
    p.add_argument("--dir", default=None, help="corpus directory (default: bundled)")
    p.set_defaults(handler=cmd_corpus)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point for the ``pte-toolkit`` command."""
    logging.basicConfig(
        level=os.getenv("LOG_LEVEL", "WARNING").upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (SolverPreconditionError, InvariantViolation) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_PRECONDITION
    except (PteToolkitError, OSError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

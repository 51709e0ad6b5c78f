"""Command-line entry point: one subcommand per capability.

    crossing-machine count FILE [--patterns] [--oracle] [--path auto|fixed|exact]
    crossing-machine gp-check FILE
    crossing-machine search (--start FILE | --random N --span B) --seed U64 --mean M
                            [--iters K] [--stale T] [--checkpoint PATH] ...
    crossing-machine bound (--file FILE | --m M --cr C) [--digits D]
    crossing-machine records FILE...
    crossing-machine render FILE -o OUT

Exit status is 0 on success, 1 with a diagnostic on stderr for any invalid
input, and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence

from pydantic import ValidationError

from crossing_machine import __version__
from crossing_machine.config import Settings, get_settings
from crossing_machine.geometry import (
    ArithmeticPath,
    select_arithmetic_path,
    validate_general_position,
)
from crossing_machine.pointsets import read_pointset, write_pointset
from crossing_machine.presenters import bound_lines, count_lines, record_lines, violation_lines
from crossing_machine.schemas import CountReport, SearchConfig
from crossing_machine.services import (
    PatternTally,
    apex_contributions,
    bound_report,
    count_crossings,
    oracle_count,
    random_start,
    run,
    verify_records,
)
from crossing_machine.svg.generator import write_svg

logger = logging.getLogger(__name__)

_PATH_CHOICES = {
    "auto": None,
    "fixed": ArithmeticPath.FIXED_WIDTH_128,
    "exact": ArithmeticPath.ARBITRARY_PRECISION,
}


def _emit(lines: Sequence[str]) -> None:
    for line in lines:
        print(line)


def cmd_count(args: argparse.Namespace, settings: Settings) -> int:
    points = read_pointset(args.file)
    path = _PATH_CHOICES[args.path]
    resolved = path or select_arithmetic_path(points)
    contributions = apex_contributions(points, path)
    tally = PatternTally.from_type_a(sum(contributions), points.n)
    report = CountReport(n=points.n, crossings=tally.crossings(), arithmetic_path=str(resolved))
    if args.patterns:
        report = report.model_copy(
            update={
                "A": tally.A,
                "B": tally.B,
                "pattern_total": tally.total,
                "apex_contributions": contributions,
            }
        )
    if args.oracle:
        report = report.model_copy(update={"oracle": oracle_count(points, settings)})
    _emit(count_lines(report))
    if report.oracle is not None and report.oracle != report.crossings:
        print("error: sweep counter and oracle disagree", file=sys.stderr)
        return 1
    return 0


def cmd_gp_check(args: argparse.Namespace, settings: Settings) -> int:
    points = read_pointset(args.file, validate=False)
    violation = validate_general_position(points)
    _emit(violation_lines(violation))
    return 0 if violation is None else 1


def cmd_search(args: argparse.Namespace, settings: Settings) -> int:
    config = SearchConfig(
        seed=args.seed,
        initial_mean=args.mean,
        stale_threshold=args.stale,
        max_doublings=args.max_doublings,
        iteration_budget=args.iters,
        oracle_checks=args.oracle_checks,
        checkpoint_every=args.checkpoint_every,
        checkpoint_path=args.checkpoint,
    )
    if args.start:
        start = read_pointset(args.start)
    else:
        start = random_start(args.random, args.span, config.seed)
    trace = run(config, start, settings)
    print(trace.summary())
    if args.output:
        write_pointset(args.output, trace.best_set)
    return 0


def cmd_bound(args: argparse.Namespace, settings: Settings) -> int:
    if args.file:
        points = read_pointset(args.file)
        m, cr = points.n, count_crossings(points)
    else:
        m, cr = args.m, args.cr
    digits = args.digits if args.digits is not None else settings.bound_digits
    _emit(bound_lines(bound_report(m, cr, digits)))
    return 0


def cmd_records(args: argparse.Namespace, settings: Settings) -> int:
    computed: dict[int, int] = {}
    for file in args.files:
        points = read_pointset(file)
        count = count_crossings(points)
        logger.info("%s: n=%d, %d crossings", file, points.n, count)
        computed[points.n] = min(count, computed.get(points.n, count))
    _emit(record_lines(verify_records(computed)))
    return 0


def cmd_render(args: argparse.Namespace, settings: Settings) -> int:
    points = read_pointset(args.file)
    write_svg(args.output, points, title=str(args.file))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crossing-machine",
        description="Exact crossing counts for straight-line drawings of complete graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help="logging level (default INFO)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    count = commands.add_parser("count", help="count crossings of a point set")
    count.add_argument("file")
    count.add_argument("--patterns", action="store_true", help="also report A, B and per-apex A")
    count.add_argument("--oracle", action="store_true", help="cross-check with the O(n^4) oracle")
    count.add_argument("--path", choices=sorted(_PATH_CHOICES), default="auto")
    count.set_defaults(handler=cmd_count)

    gp_check = commands.add_parser("gp-check", help="check general position")
    gp_check.add_argument("file")
    gp_check.set_defaults(handler=cmd_gp_check)

    search = commands.add_parser("search", help="run the local search")
    source = search.add_mutually_exclusive_group(required=True)
    source.add_argument("--start", help="start from this point-set file")
    source.add_argument("--random", type=int, metavar="N", help="start from N random points")
    search.add_argument("--span", type=int, metavar="B", help="random coordinates in [-B, B]")
    search.add_argument("--seed", type=int, required=True)
    search.add_argument("--mean", type=float, required=True, help="mean offset M")
    search.add_argument("--iters", type=int, default=10_000)
    search.add_argument("--stale", type=int, default=None, help="T (default 20 n^2)")
    search.add_argument("--max-doublings", type=int, default=None)
    search.add_argument("--oracle-checks", action="store_true")
    search.add_argument("--checkpoint", default=None, help="checkpoint file")
    search.add_argument("--checkpoint-every", type=int, default=None, metavar="K")
    search.add_argument("--output", "-o", default=None, help="write the best set here")
    search.set_defaults(handler=cmd_search)

    bound = commands.add_parser("bound", help="certify the construction constant")
    bound_source = bound.add_mutually_exclusive_group(required=True)
    bound_source.add_argument("--file", help="use n and the crossing count of this set")
    bound_source.add_argument("--m", type=int)
    bound.add_argument("--cr", type=int)
    bound.add_argument("--digits", type=int, default=None)
    bound.set_defaults(handler=cmd_bound)

    records = commands.add_parser("records", help="compare sets with the record table")
    records.add_argument("files", nargs="+")
    records.set_defaults(handler=cmd_records)

    render = commands.add_parser("render", help="draw K_n on a point set as SVG")
    render.add_argument("file")
    render.add_argument("-o", "--output", required=True)
    render.set_defaults(handler=cmd_render)
    return parser


def _check_combinations(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.command == "search" and args.random is not None and args.span is None:
        parser.error("--random requires --span")
    if args.command == "bound" and args.m is not None and args.cr is None:
        parser.error("--m requires --cr")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_combinations(parser, args)

    settings = get_settings()
    if args.log_level:
        settings = Settings(**{**settings.model_dump(), "log_level": args.log_level})
    logging.basicConfig(
        level=settings.log_level.upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[logging.StreamHandler(sys.stderr)],
    )

    try:
        return args.handler(args, settings)
    except ValidationError as exc:
        print(f"error: {exc.errors()[0]['msg']}", file=sys.stderr)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())

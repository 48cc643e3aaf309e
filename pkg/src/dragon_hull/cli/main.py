"""
dragon-hull command line

    dragon-hull params --eta 0.7853981633974483
    dragon-hull eta-table --k-max 12 --format csv
    dragon-hull hull --eta 45 --degrees --format svg --out hull.svg
    dragon-hull verify --suite signs,roots --cells 4..8
    dragon-hull coding-check --dragon 0.785398 --period 2211
    dragon-hull coding-check --map 0.5,0.5,0,0 --map 0.5,0,1,0 --period 12
    dragon-hull sweep --eta-range 0.2:0.8:13 --format csv
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from ..config import OutputFormat, RunConfig, get_settings, use_settings_file
from ..errors import DragonHullError
from .commands import (
    EXIT_USAGE,
    CommandOutput,
    cmd_coding_check,
    cmd_eta_table,
    cmd_hull,
    cmd_params,
    cmd_sweep,
    cmd_verify,
)

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(levelname)s - %(message)s'


class UsageError(Exception):
    """Malformed option values that argparse cannot catch on its own."""


def parse_eta_range(text: str) -> tuple[float, float, int]:
    """'A:B:N' -> (A, B, N)."""

    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"--eta-range expects A:B:N, got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as e:
        raise UsageError(f"--eta-range expects A:B:N, got {text!r}") from e


def parse_cells(text: str) -> list[int]:
    """'4..8' or '4,5,7' -> cell indices."""

    try:
        if ".." in text:
            low, high = text.split("..", 1)
            return list(range(int(low), int(high) + 1))
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise UsageError(f"--cells expects 'A..B' or a comma list, got {text!r}") from e


def parse_map(text: str) -> tuple[complex, complex]:
    """'a_re,a_im,b_re,b_im' -> (a, b) for z -> a z + b."""

    try:
        a_re, a_im, b_re, b_im = (float(part) for part in text.split(","))
    except ValueError as e:
        raise UsageError(f"--map expects a_re,a_im,b_re,b_im, got {text!r}") from e
    return complex(a_re, a_im), complex(b_re, b_im)


def split_suites(values: Sequence[str] | None) -> list[str] | None:
    if not values:
        return None
    return [name.strip() for value in values for name in value.split(",") if name.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eta", type=float, help="Curve parameter in (0, pi/3)")
    common.add_argument("--eta-range", help="Sweep range A:B:N (N evenly spaced values)")
    common.add_argument("--degrees", action="store_true", help="Read eta values in degrees")
    common.add_argument("--depth", type=int, help="Sampling depth (default 20)")
    common.add_argument(
        "--tol",
        type=float,
        help="Containment tolerance (default 1e-9); bisection width for eta-table",
    )
    common.add_argument(
        "--format",
        choices=[fmt.value for fmt in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="Output format",
    )
    common.add_argument("--out", type=Path, help="Write output to this file instead of stdout")
    common.add_argument("--config", type=Path, help="YAML file overriding numeric defaults")
    common.add_argument("--verbose", "-v", action="store_true", help="Debug logging")

    parser = argparse.ArgumentParser(
        prog="dragon-hull",
        description="Closed-form convex hulls of the dragon curves K_eta.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    subparsers.add_parser("params", parents=[common], help="Derived scalars and partition cell")

    table = subparsers.add_parser("eta-table", parents=[common], help="Partition roots eta_k")
    table.add_argument("--k-max", type=int, default=12, help="Largest k (default 12)")

    subparsers.add_parser(
        "hull", parents=[common], help="Predicted and empirical hull with a match report"
    )

    verify = subparsers.add_parser("verify", parents=[common], help="Run property suites")
    verify.add_argument(
        "--suite", action="append", help="Suite name(s); repeat or comma-separate"
    )
    verify.add_argument("--cells", help="Partition cells to grid, e.g. 4..8")
    verify.add_argument("--list", action="store_true", help="Print the suite catalog")

    coding = subparsers.add_parser(
        "coding-check", parents=[common], help="Extreme-point test for a periodic coding"
    )
    source = coding.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--dragon",
        nargs="?",
        type=float,
        const=True,
        default=False,
        metavar="ETA",
        help="Use the dragon IFS at ETA (or at --eta when no value follows)",
    )
    source.add_argument(
        "--map", action="append", help="Similitude a_re,a_im,b_re,b_im (repeat per map)"
    )
    coding.add_argument("--prefix", default="", help="Pre-period word, e.g. 21")
    coding.add_argument("--period", required=True, help="Period word, e.g. 2211")

    subparsers.add_parser(
        "sweep", parents=[common], help="Cell and vertex counts over an eta range"
    )
    return parser


def make_run_config(args: argparse.Namespace) -> RunConfig:
    """
    Raises:
        UsageError: malformed --eta-range, or --dragon ETA conflicting with --eta
        pydantic.ValidationError: values outside their domains
    """
    to_radians = math.radians if args.degrees else float
    eta = to_radians(args.eta) if args.eta is not None else None
    dragon = getattr(args, "dragon", False)
    if isinstance(dragon, float):
        if eta is not None and eta != to_radians(dragon):
            raise UsageError("--dragon ETA and --eta disagree")
        eta = to_radians(dragon)
    eta_range = None
    if args.eta_range:
        start, stop, steps = parse_eta_range(args.eta_range)
        eta_range = (to_radians(start), to_radians(stop), steps)

    settings = get_settings()
    return RunConfig(
        eta=eta,
        eta_range=eta_range,
        depth=settings.depth if args.depth is None else args.depth,
        tol=settings.tol if args.tol is None else args.tol,
        format=OutputFormat(args.format),
        out=args.out,
    )


def dispatch(args: argparse.Namespace, config: RunConfig) -> CommandOutput:
    if args.command == "params":
        return cmd_params(config)
    if args.command == "eta-table":
        return cmd_eta_table(config, args.k_max, args.tol)
    if args.command == "hull":
        return cmd_hull(config)
    if args.command == "verify":
        cells = parse_cells(args.cells) if args.cells else None
        return cmd_verify(config, split_suites(args.suite), cells, args.list)
    if args.command == "coding-check":
        maps = [parse_map(text) for text in args.map] if args.map else None
        return cmd_coding_check(config, args.prefix, args.period, maps)
    if args.command == "sweep":
        return cmd_sweep(config)
    raise UsageError(f"unknown command {args.command!r}")


def write_output(output: CommandOutput, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(output.text)
        return
    out.write_text(output.text, encoding="utf-8")
    logger.info("wrote %s", out)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )

    try:
        if args.config is not None:
            use_settings_file(args.config)
        config = make_run_config(args)
        output = dispatch(args, config)
    except (UsageError, ValidationError, ValueError, FileNotFoundError) as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except DragonHullError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_USAGE

    write_output(output, config.out)
    return output.exit_code


if __name__ == "__main__":  # pragma: no cover - CLI entry point
    raise SystemExit(main())

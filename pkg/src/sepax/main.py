#!/usr/bin/env python3
"""
sepax - Separation Axiom Workbench

Main entry point for the command-line interface.
"""

import argparse
import dataclasses
import logging
import sys
from typing import List, Optional

import colorama
from colorama import Fore, Style

from .config import EngineConfig
from .errors import InvalidInput
from .ui.display import DisplayManager
from .ui.report import ReportFormat
from .workbench import VERIFY_KINDS, Workbench

LEVEL_COLORS = {
    logging.DEBUG: Fore.CYAN,
    logging.INFO: Fore.GREEN,
    logging.WARNING: Fore.YELLOW,
    logging.ERROR: Fore.RED,
    logging.CRITICAL: Fore.RED + Style.BRIGHT,
}


class ColorFormatter(logging.Formatter):
    """Colours the level name only"""

    def format(self, record: logging.LogRecord) -> str:
        colour = LEVEL_COLORS.get(record.levelno, "")
        message = super().format(record)
        return message.replace(record.levelname, f"{colour}{record.levelname}{Style.RESET_ALL}", 1)


def configure_logging(verbose: bool = False, quiet: bool = False):
    logger = logging.getLogger("sepax")
    for old in list(logger.handlers):
        logger.removeHandler(old)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(ColorFormatter("%(levelname)s %(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.propagate = False
    if verbose:
        logger.setLevel(logging.DEBUG)
    elif quiet:
        logger.setLevel(logging.WARNING)
    else:
        logger.setLevel(logging.INFO)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sepax",
        description="Decide, verify and separate the axioms between T0 and T1 on finite spaces.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")
    parser.add_argument("--format", choices=[f.value for f in ReportFormat], help="report format")
    parser.add_argument("--timings", action="store_true", help="keep elapsed times in json output")
    parser.add_argument("--workers", type=int, help="threads for sweeps; overrides SEPAX_WORKERS")
    commands = parser.add_subparsers(dest="command", required=True)

    classify = commands.add_parser("classify", help="classify a space JSON file")
    classify.add_argument("path")

    show = commands.add_parser("catalog", help="list the catalog or show one entry")
    show.add_argument("action", choices=["list", "show"])
    show.add_argument("name", nargs="?")

    enumerate_ = commands.add_parser("enumerate", help="count topologies on n points")
    enumerate_.add_argument("--points", type=int, required=True)
    enumerate_.add_argument("--up-to-homeo", action="store_true")

    verify = commands.add_parser("verify", help="check the diagram or the property suite exhaustively")
    verify.add_argument("kind", choices=VERIFY_KINDS)
    verify.add_argument("--points", type=int, required=True)
    verify.add_argument("--prop", help="run a single named property")

    mine = commands.add_parser("mine", help="search for a smallest separating space")
    mine.add_argument("--satisfy", default="", help="comma-separated axioms that must hold")
    mine.add_argument("--violate", default="", help="comma-separated axioms that must fail")
    mine.add_argument("--max-points", type=int)

    export = commands.add_parser("export-diagram", help="emit the implication diagram")
    export.add_argument("--max-points", type=int, help="witness search bound for non-edges")
    return parser


def run(args: argparse.Namespace) -> int:
    config = EngineConfig.from_env()
    if args.workers is not None:
        config = dataclasses.replace(config, workers=args.workers)
    workbench = Workbench(
        config,
        ReportFormat(args.format) if args.format else None,
        args.timings,
    )
    if args.command == "classify":
        report = workbench.cmd_classify(args.path)
    elif args.command == "catalog":
        if args.action == "show" and not args.name:
            raise InvalidInput("catalog show needs an entry name")
        report = workbench.cmd_catalog(args.name if args.action == "show" else None)
    elif args.command == "enumerate":
        report = workbench.cmd_enumerate(args.points, args.up_to_homeo)
    elif args.command == "verify":
        report = workbench.cmd_verify(args.kind, args.points, args.prop)
    elif args.command == "mine":
        report = workbench.cmd_mine(args.satisfy, args.violate, args.max_points or workbench.config.max_points)
    else:
        report = workbench.cmd_export_diagram(args.max_points)

    DisplayManager.display_report(report)
    if args.command == "verify":
        DisplayManager.display_verdict(report.exit_code == 0, "verified" if report.exit_code == 0 else "failed")
    return report.exit_code


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command and return its exit code"""
    colorama.init()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    configure_logging(args.verbose, args.quiet)
    try:
        return run(args)
    except InvalidInput as e:
        DisplayManager.display_error(str(e))
        return 2
    except KeyboardInterrupt:
        print(f"\n{Fore.WHITE}Interrupted.{Style.RESET_ALL}", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())

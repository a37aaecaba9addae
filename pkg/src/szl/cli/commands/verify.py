"""`szl verify` command implementation."""

from __future__ import annotations

import argparse
from dataclasses import asdict
from pathlib import Path

from szl.cli.config import add_tolerance_arguments, config_from_args
from szl.errors import ErrorHandlingConfig, ErrorReporter, configure_logging
from szl.errors.config import resolve_seed
from szl.eval.harness import run_suite
from szl.eval.scorecard import write_report_to_dir
from szl.eval.suite import SECTIONS, SUITES, load_suite

DEFAULT_OUT_DIR = Path("verify")


def add_subparser(subparsers: argparse._SubParsersAction) -> None:
    """Register the `verify` command."""
    parser = subparsers.add_parser("verify", help="Reproduce the golden examples and write a report.")
    parser.add_argument("--suite", choices=SUITES, default=SUITES[0], help="Named golden suite.")
    parser.add_argument(
        "--sections",
        nargs="*",
        default=None,
        help=f"Restrict to sections or case names ({', '.join(SECTIONS)}).",
    )
    parser.add_argument("--out", default=None, help=f"Report directory (default: ./{DEFAULT_OUT_DIR}).")
    add_tolerance_arguments(parser)
    parser.set_defaults(command="verify")


def run(args: argparse.Namespace) -> int:
    """Run the suite, write ``report.json`` and ``report.csv``; nonzero when any case fails."""
    cfg = config_from_args(args)
    out_dir = cfg.out or DEFAULT_OUT_DIR
    err_cfg = ErrorHandlingConfig.from_env(default=ErrorHandlingConfig(log_dir=out_dir / "logs")).pinned()
    logger, event_logger = configure_logging(cfg=err_cfg)
    reporter = ErrorReporter(cfg=err_cfg, logger=logger, event_logger=event_logger)

    suite = str(getattr(args, "suite", SUITES[0]))
    cases = load_suite(suite, cfg.tolerances, getattr(args, "sections", None))
    logger.info("Running %d cases of suite '%s'.", len(cases), suite)
    rows = run_suite(cases, reporter)
    write_report_to_dir(
        rows,
        out_dir,
        metadata={"suite": suite, "tolerances": asdict(cfg.tolerances), "seed": resolve_seed()},
    )
    reporter.print_summary()
    logger.info("Report written to %s.", out_dir / "report.json")
    return reporter.exit_code()

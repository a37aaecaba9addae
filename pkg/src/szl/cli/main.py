"""szl command-line interface entrypoint."""

from __future__ import annotations

import argparse
import logging
from collections.abc import Callable, Sequence
from pathlib import Path
from types import ModuleType
from typing import Optional

from szl.cli.commands import aggregate, cmv, gen, lump, quantize, simulate, verify
from szl.errors import ConfigError, ErrorHandlingConfig, SzlError, configure_logging
from szl.io import write_json

CommandModule = ModuleType
CommandRunner = Callable[[argparse.Namespace], int]

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2

logger = logging.getLogger("szl.cli")

# Map CLI subcommands to their implementation modules.
_COMMANDS: dict[str, CommandModule] = {
    "gen": gen,
    "lump": lump,
    "quantize": quantize,
    "aggregate": aggregate,
    "cmv": cmv,
    "simulate": simulate,
    "verify": verify,
}


def build_arg_parser() -> argparse.ArgumentParser:
    """Build and return the top-level argument parser."""
    parser = argparse.ArgumentParser(
        prog="szl",
        description="Szegedy quantization, strong lumping and CMV analysis of random walks.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="<command>")

    for name, module in _COMMANDS.items():
        add_subparser = getattr(module, "add_subparser", None)
        if add_subparser is None:
            raise RuntimeError(f"CLI command module '{name}' is missing add_subparser().")
        add_subparser(subparsers)

    return parser


def _error_target(args: argparse.Namespace) -> Optional[Path]:
    out = getattr(args, "out", None)
    if not out or args.command == "verify":
        return None
    return Path(out)


def main(argv: Sequence[str] | None = None) -> int:
    """
    Parse args, dispatch to the selected command and map failures to exit statuses.

    Returns 0 on success, 1 on a domain error (its JSON report goes where the output would
    have gone) and 2 on a usage, configuration or input-file error.
    """
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE_ERROR
    command_name = str(args.command)

    module = _COMMANDS.get(command_name)
    if module is None:
        raise RuntimeError(f"Unknown command: {command_name}")

    runner: CommandRunner | None = getattr(module, "run", None)
    if runner is None:
        raise RuntimeError(f"CLI command module '{command_name}' is missing run().")

    configure_logging(cfg=ErrorHandlingConfig.from_env(default=ErrorHandlingConfig(write_jsonl=False)))
    try:
        return int(runner(args) or EXIT_OK)
    except ConfigError as exc:
        logger.error("%s", exc)
        return EXIT_USAGE_ERROR
    except SzlError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        write_json({"type": "error", **exc.to_payload()}, _error_target(args))
        return EXIT_DOMAIN_ERROR
    except (OSError, ValueError) as exc:
        logger.error("Cannot read input: %s", exc)
        return EXIT_USAGE_ERROR


# Keep console script compatibility with pyproject's entrypoint.
app = main


if __name__ == "__main__":
    raise SystemExit(main())

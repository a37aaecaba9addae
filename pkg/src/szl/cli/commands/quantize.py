"""`szl quantize` command implementation."""

from __future__ import annotations

import argparse

from szl.cli.config import (
    add_graph_arguments,
    add_output_arguments,
    add_tolerance_arguments,
    config_from_args,
    resolve_walk,
    resolve_walk_partition,
)
from szl.io import action_csv, dump_action, write_json, write_text
from szl.pipeline.workflows import lump_walk
from szl.szegedy import SzegedyOperator


def add_subparser(subparsers: argparse._SubParsersAction) -> None:
    """Register the `quantize` command."""
    parser = subparsers.add_parser(
        "quantize",
        help="Write the action table of the Szegedy walk; with --partition, of the lumped walk.",
    )
    add_graph_arguments(parser)
    add_tolerance_arguments(parser)
    add_output_arguments(parser)
    parser.set_defaults(command="quantize")


def run(args: argparse.Namespace) -> int:
    cfg = config_from_args(args)
    inputs = resolve_walk(cfg)
    chain = inputs.chain
    if cfg.partition is not None:
        chain = lump_walk(chain, resolve_walk_partition(cfg, inputs), cfg.tolerances).lumped
    op = SzegedyOperator(chain)
    if cfg.fmt == "csv":
        write_text(action_csv(op), cfg.out)
    else:
        write_json(dump_action(op), cfg.out)
    return 0

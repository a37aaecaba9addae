"""`szl lump` command implementation."""

from __future__ import annotations

import argparse
import logging

from szl.cli.config import (
    add_graph_arguments,
    add_output_arguments,
    add_tolerance_arguments,
    config_from_args,
    resolve_walk,
    resolve_walk_partition,
)
from szl.io import dump_matrix, matrix_csv, write_json, write_text
from szl.pipeline.workflows import lump_walk

logger = logging.getLogger(__name__)


def add_subparser(subparsers: argparse._SubParsersAction) -> None:
    """Register the `lump` command."""
    parser = subparsers.add_parser("lump", help="Strongly lump a chain along a partition.")
    add_graph_arguments(parser)
    add_tolerance_arguments(parser)
    add_output_arguments(parser)
    parser.set_defaults(command="lump")


def run(args: argparse.Namespace) -> int:
    """Write the lumped matrix; a partition the chain cannot be lumped along raises NotLumpable."""
    cfg = config_from_args(args)
    inputs = resolve_walk(cfg)
    walk = lump_walk(inputs.chain, resolve_walk_partition(cfg, inputs), cfg.tolerances)
    logger.info("Lumped %d vertices into %d blocks.", walk.chain.size, walk.lumped.size)
    if cfg.fmt == "csv":
        write_text(matrix_csv(walk.lumped), cfg.out)
    else:
        write_json(dump_matrix(walk.lumped), cfg.out)
    return 0

"""`szl aggregate` command implementation."""

from __future__ import annotations

import argparse
import logging
from pathlib import Path

from szl.cli.config import (
    add_graph_arguments,
    add_output_arguments,
    add_tolerance_arguments,
    config_from_args,
    resolve_walk,
    resolve_walk_partition,
)
from szl.io import (
    dump_aggregated_basis,
    dump_linking,
    dump_matrix,
    dump_partition,
    dump_report,
    linking_csv,
    load_linking,
    write_json,
    write_text,
)
from szl.pipeline.workflows import aggregate, lump_walk

logger = logging.getLogger(__name__)


def add_subparser(subparsers: argparse._SubParsersAction) -> None:
    """Register the `aggregate` command."""
    parser = subparsers.add_parser(
        "aggregate",
        help="Check the consistency conditions, solve the linking coefficients and build the aggregated basis.",
    )
    add_graph_arguments(parser)
    parser.add_argument(
        "--linking",
        default=None,
        help="Linking-coefficient JSON to use instead of solving; the residual checks it.",
    )
    add_tolerance_arguments(parser)
    add_output_arguments(parser)
    parser.set_defaults(command="aggregate")


def run(args: argparse.Namespace) -> int:
    """
    Aggregate the walk of ``--graph``/``--matrix`` along ``--partition``.

    JSON output carries the partition, lumped matrix, consistency report, linking
    coefficients, aggregated basis and the reduction residual. CSV output is the linking table.
    """
    cfg = config_from_args(args)
    inputs = resolve_walk(cfg)
    walk = lump_walk(inputs.chain, resolve_walk_partition(cfg, inputs), cfg.tolerances)
    linking_path = getattr(args, "linking", None)
    linking = load_linking(Path(linking_path)) if linking_path else None
    result = aggregate(walk, cfg.tolerances, linking)
    logger.info(
        "Aggregated basis of %d states; reduction residual %.3e.",
        len(result.basis.states),
        result.residual,
    )
    if cfg.fmt == "csv":
        write_text(linking_csv(result.linking), cfg.out)
        return 0
    write_json(
        {
            "type": "aggregation",
            "partition": dump_partition(walk.partition),
            "lumped": dump_matrix(walk.lumped),
            "report": dump_report(result.report),
            "linking": dump_linking(result.linking),
            "basis": dump_aggregated_basis(result.basis),
            "residual": result.residual,
        },
        cfg.out,
    )
    return 0

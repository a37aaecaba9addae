"""`szl gen` command implementation."""

from __future__ import annotations

import argparse

from szl.cli.config import add_generator_arguments, add_output_arguments, config_from_args
from szl.graphs import FAMILIES
from szl.io import dump_graph, render_csv, write_json, write_text
from szl.pipeline.workflows import resolve_graph


def add_subparser(subparsers: argparse._SubParsersAction) -> None:
    """Register the `gen` command."""
    parser = subparsers.add_parser("gen", help="Generate a graph of a named family.")
    parser.add_argument("graph", metavar="family", help=f"One of: {', '.join(FAMILIES)}.")
    add_generator_arguments(parser)
    add_output_arguments(parser)
    parser.set_defaults(command="gen")


def run(args: argparse.Namespace) -> int:
    cfg = config_from_args(args)
    graph, _ = resolve_graph(str(cfg.graph), **cfg.params)
    if cfg.fmt == "csv":
        write_text(render_csv(("source", "target"), graph.arcs), cfg.out)
    else:
        write_json(dump_graph(graph), cfg.out)
    return 0

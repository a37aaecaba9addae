"""`szl cmv` command implementation."""

from __future__ import annotations

import argparse
import logging
from typing import Any, Optional

from szl.cli.config import (
    PipelineConfig,
    add_graph_arguments,
    add_output_arguments,
    add_tolerance_arguments,
    config_from_args,
    resolve_walk,
    resolve_walk_partition,
)
from szl.cmv import VerblunskySequence, build_cmv_matrix, geronimus_pqr, jacobi_from_verblunsky
from szl.io import cmv_csv, dump_chain, dump_verblunsky, load_verblunsky, write_json, write_text
from szl.pipeline.workflows import (
    aggregate,
    lump_walk,
    orthonormalized_cmv,
    recurrence_verblunsky,
    root_block,
    start_vector,
    trust_free_ball,
)

logger = logging.getLogger(__name__)

METHODS: tuple[str, ...] = ("recurrence", "orthonormalize")


def add_subparser(subparsers: argparse._SubParsersAction) -> None:
    """Register the `cmv` command."""
    parser = subparsers.add_parser("cmv", help="Verblunsky coefficients of the lumped or full walk.")
    add_graph_arguments(parser)
    parser.add_argument("--root", default=None, help="Vertex whose block starts the walk (default: first block).")
    parser.add_argument("--full", action="store_true", help="Use the full walk instead of the lumped one.")
    parser.add_argument(
        "--method",
        choices=METHODS,
        default="recurrence",
        help="S/R recurrence, or orthonormalization of U^k e0 followed by reading off the CMV matrix.",
    )
    parser.add_argument("--geronimus", action="store_true", help="Also emit the birth-death chain (p, q, r).")
    parser.add_argument("--jacobi", action="store_true", help="Also emit the Jacobi coefficients (r, s).")
    parser.add_argument(
        "--from-file",
        default=None,
        help="Verblunsky JSON to analyse instead of running a walk (replaces --graph).",
    )
    add_tolerance_arguments(parser)
    add_output_arguments(parser)
    parser.set_defaults(command="cmv")


def _walk_sequence(
    cfg: PipelineConfig, args: argparse.Namespace
) -> tuple[VerblunskySequence, dict[str, Any]]:
    inputs = resolve_walk(cfg)
    part = resolve_walk_partition(cfg, inputs)
    walk = lump_walk(inputs.chain, part, cfg.tolerances)
    root: Optional[str] = getattr(args, "root", None)
    block = root_block(part, root) if root is not None else part.labels[0]

    full = bool(getattr(args, "full", False))
    basis = None
    if full and len(part.block(block)) > 1:
        basis = aggregate(walk, cfg.tolerances).basis
    op, e0 = start_vector(walk, block, full=full, basis=basis)

    if getattr(args, "method", "recurrence") == "orthonormalize":
        v, _ = orthonormalized_cmv(op, e0, cfg.tolerances)
    else:
        v, _ = recurrence_verblunsky(op, e0, cfg.tolerances)
    if inputs.family == "free_ball":
        v = trust_free_ball(v, int(cfg.params.get("radius", 2)))
    logger.info("%d Verblunsky coefficients from block %s.", len(v), block)
    return v, {"block": block, "walk": "full" if full else "lumped"}


def run(args: argparse.Namespace) -> int:
    """
    Verblunsky coefficients of a walk, or of the sequence in ``--from-file``.

    JSON output carries the sequence with optional Geronimus and Jacobi data; CSV output is the
    CMV matrix.
    """
    cfg = config_from_args(args)
    if cfg.verblunsky is not None:
        v = load_verblunsky(cfg.verblunsky)
        origin: dict[str, Any] = {"source": str(cfg.verblunsky)}
    else:
        v, origin = _walk_sequence(cfg, args)

    if cfg.fmt == "csv":
        write_text(cmv_csv(build_cmv_matrix(v)), cfg.out)
        return 0
    payload: dict[str, Any] = {**dump_verblunsky(v), **origin}
    if getattr(args, "geronimus", False):
        payload["geronimus"] = dump_chain(geronimus_pqr(v))
    if getattr(args, "jacobi", False):
        j = jacobi_from_verblunsky(v)
        payload["jacobi"] = {"r": list(j.r), "s": list(j.s)}
    write_json(payload, cfg.out)
    return 0

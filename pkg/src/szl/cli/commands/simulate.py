"""`szl simulate` command implementation."""

from __future__ import annotations

import argparse
import logging
from pathlib import Path

from szl.analysis import simulate_quantum
from szl.cli.config import (
    WalkInputs,
    add_graph_arguments,
    add_output_arguments,
    add_tolerance_arguments,
    config_from_args,
    resolve_walk,
    resolve_walk_partition,
)
from szl.errors import ConfigError
from szl.graphs import canonical_root
from szl.io import dump_time_series, load_state, time_series_csv, write_json, write_text
from szl.markov import Distribution, StochasticMatrix, classical_evolve
from szl.pipeline.workflows import lump_walk
from szl.szegedy import SzegedyOperator, WalkerState, phi_vector

logger = logging.getLogger(__name__)

DEFAULT_STEPS = 10


def add_subparser(subparsers: argparse._SubParsersAction) -> None:
    """Register the `simulate` command."""
    parser = subparsers.add_parser(
        "simulate",
        help="Evolve the quantum (or, with --classical, the classical) walk and record positions.",
    )
    add_graph_arguments(parser)
    parser.add_argument("--steps", type=int, default=DEFAULT_STEPS, help=f"Number of steps (default {DEFAULT_STEPS}).")
    parser.add_argument(
        "--initial",
        default=None,
        help="phi:<vertex> | arc:<i>,<j> | vertex:<v> | state:<path> (default: phi of the root vertex).",
    )
    parser.add_argument("--classical", action="store_true", help="Evolve the classical chain instead.")
    add_tolerance_arguments(parser)
    add_output_arguments(parser)
    parser.set_defaults(command="simulate")


def _default_vertex(inputs: WalkInputs, chain: StochasticMatrix, lumped: bool) -> str:
    if lumped or inputs.family is None:
        return chain.vertices[0]
    return canonical_root(inputs.family, inputs.graph)


def _split_initial(spec: str) -> tuple[str, str]:
    kind, sep, rest = spec.partition(":")
    if not sep or kind not in ("phi", "arc", "vertex", "state") or not rest:
        raise ConfigError(
            f"Unknown initial state {spec!r}; expected phi:<vertex>, arc:<i>,<j>, vertex:<v> or state:<path>."
        )
    return kind, rest


def _quantum_start(op: SzegedyOperator, spec: str) -> WalkerState:
    kind, rest = _split_initial(spec)
    if kind == "arc":
        i, sep, j = rest.partition(",")
        if not sep:
            raise ConfigError(f"Arc initial state needs two vertices, got {rest!r}.")
        return WalkerState.basis_vector(op.basis, i.strip(), j.strip())
    if kind == "state":
        return load_state(Path(rest), op.basis)
    return phi_vector(op, rest)


def _classical_start(chain: StochasticMatrix, spec: str) -> Distribution:
    kind, rest = _split_initial(spec)
    if kind in ("arc", "state"):
        raise ConfigError("The classical walk starts at a vertex, not a walker state.")
    return Distribution.delta(chain.vertices, rest)


def run(args: argparse.Namespace) -> int:
    cfg = config_from_args(args)
    inputs = resolve_walk(cfg)
    chain = inputs.chain
    lumped = cfg.partition is not None
    if lumped:
        chain = lump_walk(chain, resolve_walk_partition(cfg, inputs), cfg.tolerances).lumped
    initial = cfg.initial or f"phi:{_default_vertex(inputs, chain, lumped)}"

    if getattr(args, "classical", False):
        dist = _classical_start(chain, initial)
        series = [dist]
        for _ in range(cfg.steps):
            dist = classical_evolve(chain, dist, 1)
            series.append(dist)
    else:
        op = SzegedyOperator(chain)
        series = simulate_quantum(op, _quantum_start(op, initial), cfg.steps)
    logger.info("Simulated %d steps from %s.", cfg.steps, initial)

    if cfg.fmt == "csv":
        write_text(time_series_csv(series), cfg.out)
    else:
        write_json({**dump_time_series(series), "initial": initial}, cfg.out)
    return 0

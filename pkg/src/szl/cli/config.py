"""Resolved configuration of one CLI invocation."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping, Optional

from szl.errors import ConfigError, ToleranceConfig
from szl.errors.config import load_config, resolve_tolerances
from szl.graphs import DirectedGraph, VertexPartition
from szl.io import load_matrix
from szl.markov import StochasticMatrix, homogeneous_walk
from szl.pipeline.workflows import resolve_graph, resolve_partition

COMMANDS: tuple[str, ...] = ("gen", "lump", "quantize", "aggregate", "cmv", "simulate", "verify")
FORMATS: tuple[str, ...] = ("json", "csv")


@dataclass(frozen=True)
class PipelineConfig:
    """
    Everything a verb needs, resolved from flags, config file and environment.

    Parameters
    ----------
    command
        One of :data:`COMMANDS`.
    graph
        Family name or ``file:<path>``.
    params
        Generator parameters (``n``, ``radius``, ``num_generators``, ``involutive``).
    partition
        Partition spec; ``None`` means the family's distance partition.
    matrix
        Optional stochastic-matrix artifact replacing the homogeneous walk of ``graph``.
    tolerances
        Numerical tolerances after all overrides.
    steps
        Number of evolution steps for ``simulate``.
    initial
        Initial-state spec for ``simulate``: ``phi:<vertex>``, ``arc:<i>,<j>``, ``vertex:<v>``
        or ``state:<path>``.
    verblunsky
        Verblunsky-sequence artifact that ``cmv`` reads instead of running a walk.
    out
        Output path; ``None`` writes to stdout (``verify`` treats it as a directory).
    fmt
        ``json`` or ``csv``.

    Usage example
    -------------
        cfg = PipelineConfig(command="cmv", graph="hexahedron", partition="distance:000")
    """

    command: str
    graph: Optional[str] = None
    params: Mapping[str, Any] = field(default_factory=dict)
    partition: Optional[str] = None
    matrix: Optional[Path] = None
    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)
    steps: int = 0
    initial: Optional[str] = None
    verblunsky: Optional[Path] = None
    out: Optional[Path] = None
    fmt: str = "json"

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError(f"Unknown command '{self.command}'; expected one of {', '.join(COMMANDS)}.")
        if self.fmt not in FORMATS:
            raise ConfigError(f"Unknown format '{self.fmt}'; expected json or csv.")
        if isinstance(self.steps, bool) or not isinstance(self.steps, int) or self.steps < 0:
            raise ConfigError(f"--steps must be a nonnegative integer, got {self.steps!r}.")
        if self.verblunsky is not None:
            if self.command != "cmv" or self.graph is not None or self.matrix is not None:
                raise ConfigError("--from-file replaces --graph and --matrix and only applies to cmv.")
        elif self.command not in ("gen", "verify") and self.graph is None and self.matrix is None:
            raise ConfigError(f"szl {self.command} requires --graph or --matrix.")


def add_generator_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, default=None, help="Dimension of hypercube / size of complete graphs.")
    parser.add_argument("--radius", type=int, default=None, help="Radius of free-group balls.")
    parser.add_argument("--generators", type=int, default=None, help="Number of free-group generators.")
    parser.add_argument("--involutive", action="store_true", help="Generators are their own inverses.")


def add_graph_arguments(parser: argparse.ArgumentParser, *, partition: bool = True) -> None:
    """Register the graph, generator, matrix and (optionally) partition flags."""
    parser.add_argument("--graph", help="Graph family (hypercube, octahedron, ...) or file:<path>.")
    add_generator_arguments(parser)
    parser.add_argument("--matrix", default=None, help="Stochastic-matrix JSON replacing the homogeneous walk.")
    if partition:
        parser.add_argument(
            "--partition",
            default=None,
            help="distance:<root> | distance | file:<path> | singletons (default: distance).",
        )


def add_tolerance_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--tol-lump", type=float, default=None, help="Lumpability tolerance (default 1e-10).")
    parser.add_argument("--tol-consistency", type=float, default=None, help="Consistency tolerance (default 1e-9).")
    parser.add_argument("--tol-dep", type=float, default=None, help="Linear-dependence tolerance (default 1e-8).")


def add_output_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", default=None, help="Output path (default: stdout).")
    parser.add_argument("--format", dest="fmt", choices=FORMATS, default="json", help="Output format.")


def graph_params(args: argparse.Namespace) -> dict[str, Any]:
    """Generator keyword arguments from the parsed flags, skipping unset ones."""
    params: dict[str, Any] = {}
    if getattr(args, "n", None) is not None:
        params["n"] = args.n
    if getattr(args, "radius", None) is not None:
        params["radius"] = args.radius
    if getattr(args, "generators", None) is not None:
        params["num_generators"] = args.generators
    if getattr(args, "involutive", False):
        params["involutive"] = True
    return params


def config_from_args(args: argparse.Namespace, *, cwd: Optional[Path] = None) -> PipelineConfig:
    """
    Build a PipelineConfig from parsed arguments.

    Tolerances resolve defaults, then the ``tolerances:`` section of ``szl.yaml`` in ``cwd``,
    then ``SZL_TOL_*`` variables, then ``--tol-*`` flags.
    """
    config = load_config(cwd or Path.cwd())
    tolerances = resolve_tolerances(
        config,
        {
            "lumpability": getattr(args, "tol_lump", None),
            "consistency": getattr(args, "tol_consistency", None),
            "dependence": getattr(args, "tol_dep", None),
        },
    )
    out = getattr(args, "out", None)
    matrix = getattr(args, "matrix", None)
    from_file = getattr(args, "from_file", None)
    return PipelineConfig(
        command=str(args.command),
        graph=getattr(args, "graph", None),
        params=graph_params(args),
        partition=getattr(args, "partition", None),
        matrix=Path(matrix) if matrix else None,
        tolerances=tolerances,
        steps=int(getattr(args, "steps", 0) or 0),
        initial=getattr(args, "initial", None),
        verblunsky=Path(from_file) if from_file else None,
        out=Path(out) if out else None,
        fmt=str(getattr(args, "fmt", "json")),
    )


@dataclass(frozen=True, eq=False)
class WalkInputs:
    """The graph a verb works on, its family (None for files) and the chain on it."""

    graph: DirectedGraph
    family: Optional[str]
    chain: StochasticMatrix


def resolve_walk(cfg: PipelineConfig) -> WalkInputs:
    """
    ``--matrix`` with its support graph, or the homogeneous walk of ``--graph``.

    Raises
    ------
    ConfigError
        When both or neither of ``--graph`` and ``--matrix`` are given.
    """
    if cfg.matrix is not None and cfg.graph is not None:
        raise ConfigError("Use either --graph or --matrix, not both.")
    if cfg.matrix is not None:
        chain = load_matrix(cfg.matrix)
        coo = chain.probabilities.tocoo()
        arcs = [(chain.vertices[i], chain.vertices[j]) for i, j in zip(coo.row.tolist(), coo.col.tolist())]
        return WalkInputs(graph=DirectedGraph.build(chain.vertices, arcs), family=None, chain=chain)
    if cfg.graph is None:
        raise ConfigError(f"szl {cfg.command} requires --graph or --matrix.")
    graph, family = resolve_graph(cfg.graph, **cfg.params)
    return WalkInputs(graph=graph, family=family, chain=homogeneous_walk(graph))


def resolve_walk_partition(cfg: PipelineConfig, inputs: WalkInputs) -> VertexPartition:
    return resolve_partition(cfg.partition, inputs.graph, inputs.family)

"""Composite workflows shared by the CLI verbs and the golden suite."""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Optional

from szl.aggregation import (
    AggregatedBasis,
    ConsistencyReport,
    LinkingCoefficients,
    aggregated_basis,
    aggregated_phi,
    check_conditions,
    solve_linking,
    verify_reduction,
)
from szl.cmv import (
    CmvMatrix,
    VerblunskySequence,
    cmv_orthonormalize,
    verblunsky_from_cmv_matrix,
    verblunsky_via_recurrence,
)
from szl.errors import ConfigError, InconsistentConstraints, ToleranceConfig, UnknownVertex
from szl.graphs import DirectedGraph, VertexPartition, canonical_root, distance_partition, generate
from szl.io import load_graph, load_partition
from szl.markov import StochasticMatrix, lump
from szl.szegedy import (
    SzegedyOperator,
    WalkerState,
    apply_reflection,
    apply_swap,
    apply_U,
    apply_U_inverse,
    phi_vector,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LumpedWalk:
    """A chain, the partition it was lumped along and the lumped chain."""

    chain: StochasticMatrix
    partition: VertexPartition
    lumped: StochasticMatrix


@dataclass(frozen=True, eq=False)
class AggregationResult:
    """
    Everything the aggregation of a lumped walk produces.

    ``residual`` is the :func:`verify_reduction` deviation of the aggregated basis.
    """

    walk: LumpedWalk
    report: ConsistencyReport
    linking: LinkingCoefficients
    basis: AggregatedBasis
    operator: SzegedyOperator
    lumped_operator: SzegedyOperator
    residual: float


def resolve_graph(spec: str, **params: Any) -> tuple[DirectedGraph, Optional[str]]:
    """
    Build the graph named by ``spec``.

    ``spec`` is a family name (see :data:`szl.graphs.FAMILIES`) or ``file:<path>`` pointing
    at a graph artifact. Returns the graph and its family (None for files).

    Usage example
    -------------
        g, family = resolve_graph("hypercube", n=4)
    """
    if spec.startswith("file:"):
        return load_graph(Path(spec[len("file:") :])), None
    family = spec.strip().lower()
    return generate(family, **params), family


def resolve_partition(spec: Optional[str], g: DirectedGraph, family: Optional[str]) -> VertexPartition:
    """
    Build the partition named by ``spec`` for ``g``.

    Accepted forms: ``distance:<root>``, ``distance`` (the family's canonical root),
    ``file:<path>`` and ``singletons``. ``None`` means ``distance``.

    Raises
    ------
    ConfigError
        On an unknown form, or ``distance`` without a family to take the root from.
    """
    text = "distance" if spec is None else spec.strip()
    if text == "singletons":
        return VertexPartition.singletons(g.vertices)
    if text.startswith("file:"):
        part = load_partition(Path(text[len("file:") :]))
        part.validate_for(g.vertices)
        return part
    if text == "distance":
        if family is None:
            raise ConfigError("Partition 'distance' needs a graph family; use distance:<root>.")
        return distance_partition(g, canonical_root(family, g))
    if text.startswith("distance:"):
        return distance_partition(g, text[len("distance:") :])
    raise ConfigError(
        f"Unknown partition spec {spec!r}; expected distance:<root>, file:<path> or singletons."
    )


def lump_walk(p: StochasticMatrix, part: VertexPartition, tolerances: ToleranceConfig) -> LumpedWalk:
    return LumpedWalk(chain=p, partition=part, lumped=lump(p, part, tolerances.lumpability))


def aggregate(
    walk: LumpedWalk, tolerances: ToleranceConfig, linking: Optional[LinkingCoefficients] = None
) -> AggregationResult:
    """
    Check the consistency conditions, solve the linking coefficients and verify the reduction.

    Given ``linking`` coefficients replace the solved ones; the residual then checks them.

    Raises
    ------
    InconsistentConstraints
        When a consistency condition fails; the witness names the condition.

    Usage example
    -------------
        result = aggregate(lump_walk(p, part, ToleranceConfig()), ToleranceConfig())
        result.residual < 1e-10
    """
    p, part, lumped = walk.chain, walk.partition, walk.lumped
    report = check_conditions(p, part, lumped, tolerances.consistency)
    if not report.passed:
        failure = report.failures()[0]
        raise InconsistentConstraints(
            f"Consistency condition '{failure.name}' fails.",
            witness={"condition": failure.name, **(failure.witness or {})},
        )
    if linking is None:
        linking = solve_linking(p, part, lumped, tolerances.consistency)
    basis = aggregated_basis(p, part, lumped, linking)
    op = SzegedyOperator(p)
    lumped_op = SzegedyOperator(lumped)
    return AggregationResult(
        walk=walk,
        report=report,
        linking=linking,
        basis=basis,
        operator=op,
        lumped_operator=lumped_op,
        residual=verify_reduction(op, basis, lumped_op),
    )


def root_block(part: VertexPartition, root: str) -> str:
    try:
        return part.block_of[root]
    except KeyError as exc:
        raise UnknownVertex(f"Root {root!r} is in no block.", witness={"vertex": root}) from exc


def recurrence_verblunsky(
    op: SzegedyOperator, e0: WalkerState, tolerances: ToleranceConfig
) -> tuple[VerblunskySequence, tuple[WalkerState, ...]]:
    """Verblunsky coefficients of ``e0`` under ``U = S R`` from the S/R recurrence."""
    return verblunsky_via_recurrence(
        apply_swap, lambda s: apply_reflection(op, s), e0, tolerances.dependence
    )


def start_vector(
    walk: LumpedWalk,
    block: str,
    *,
    full: bool,
    basis: Optional[AggregatedBasis] = None,
) -> tuple[SzegedyOperator, WalkerState]:
    """
    Operator and coin-invariant start of the lumped or full walk for ``block``.

    The lumped walk starts at ``phi_block``. The full walk starts at ``phi_root`` when the
    block is a singleton and at the aggregated ``phi_block`` otherwise, which needs ``basis``.

    Raises
    ------
    ConfigError
        When the full walk of a non-singleton block is asked for without ``basis``.
    """
    if not full:
        op = SzegedyOperator(walk.lumped)
        return op, phi_vector(op, block)
    op = SzegedyOperator(walk.chain)
    members = walk.partition.block(block)
    if len(members) == 1:
        return op, phi_vector(op, members[0])
    if basis is None:
        raise ConfigError(
            f"Block {block!r} is not a singleton; the full-walk start needs the aggregated basis."
        )
    return op, aggregated_phi(basis, walk.lumped, block)


def lumped_verblunsky(
    walk: LumpedWalk, block: str, tolerances: ToleranceConfig
) -> tuple[VerblunskySequence, tuple[WalkerState, ...]]:
    """Verblunsky coefficients of the lumped walk started at ``phi_block``."""
    return recurrence_verblunsky(*start_vector(walk, block, full=False), tolerances)


def full_verblunsky(
    walk: LumpedWalk,
    block: str,
    tolerances: ToleranceConfig,
    basis: Optional[AggregatedBasis] = None,
) -> tuple[VerblunskySequence, tuple[WalkerState, ...]]:
    """Verblunsky coefficients of the full walk started at the lift of ``phi_block``."""
    return recurrence_verblunsky(*start_vector(walk, block, full=True, basis=basis), tolerances)


def orthonormalized_cmv(
    op: SzegedyOperator, e0: WalkerState, tolerances: ToleranceConfig
) -> tuple[VerblunskySequence, CmvMatrix]:
    """Verblunsky coefficients read off the CMV matrix built by orthonormalizing ``U^k e0``."""
    _, c = cmv_orthonormalize(
        lambda s: apply_U(op, s), lambda s: apply_U_inverse(op, s), e0, tolerances.dependence
    )
    return verblunsky_from_cmv_matrix(c), c


def trust_free_ball(v: VerblunskySequence, radius: int) -> VerblunskySequence:
    """
    Mark the indices of a free-ball sequence that the ball boundary leaves untouched.

    Coefficients up to ``2 (radius - 2)`` agree with the infinite tree.
    """
    bound = max(2 * (radius - 2), -1)
    if bound < len(v) - 1:
        logger.warning(
            "Free-ball coefficients past index %d are affected by the boundary at radius %d.",
            bound,
            radius,
        )
    return replace(v, boundary_trusted_up_to=bound)

"""Aggregated states ``|u, v>`` and the check that they reduce the walk to the lumped walk."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from szl.aggregation.linking import LinkingCoefficients
from szl.errors import ArcNotInBasis, BasisMismatch
from szl.graphs.types import VertexPartition
from szl.markov.types import StochasticMatrix
from szl.szegedy.basis import ArcBasis, WalkerState, combine
from szl.szegedy.operator import SzegedyOperator, apply_projection, apply_swap, apply_U

BlockPair = tuple[str, str]

COEFFICIENT_FLOOR = 1e-15


@dataclass(frozen=True, eq=False)
class AggregatedBasis:
    """
    States ``|u, v> = sum_{i in u, j in v} s_iv sqrt(P_ij) |i, j>`` for every lumped arc ``u -> v``.

    Usage example
    -------------
        basis = aggregated_basis(p, part, p_lumped, solve_linking(p, part, p_lumped))
        basis.state("B", "C").items()
    """

    arc_basis: ArcBasis
    pairs: tuple[BlockPair, ...]
    states: tuple[WalkerState, ...]

    def __post_init__(self) -> None:
        if len(self.pairs) != len(self.states):
            raise ValueError(f"{len(self.pairs)} block pairs but {len(self.states)} states.")
        for state in self.states:
            if state.basis is not self.arc_basis and state.basis != self.arc_basis:
                raise BasisMismatch("Aggregated states must share one arc basis.")

    @cached_property
    def index(self) -> dict[BlockPair, int]:
        return {pair: k for k, pair in enumerate(self.pairs)}

    def state(self, u: str, v: str) -> WalkerState:
        try:
            return self.states[self.index[(u, v)]]
        except KeyError as exc:
            raise BasisMismatch(f"No aggregated state |{u},{v}>.", witness={"pair": [u, v]}) from exc

    def matrix(self) -> np.ndarray:
        """Pairs-by-arcs matrix of amplitudes."""
        return np.vstack([s.amplitudes for s in self.states])

    def gram(self) -> np.ndarray:
        m = self.matrix()
        return m @ m.T


def aggregated_basis(
    p: StochasticMatrix,
    part: VertexPartition,
    p_lumped: StochasticMatrix,
    s: LinkingCoefficients,
) -> AggregatedBasis:
    """
    Build ``|u, v>`` for each ``(u, v)`` with ``Pl_uv > 0``, in lumped arc order.

    Raises
    ------
    NotUnit
        When a state does not come out unit-norm (the coefficients were not normalized for ``p``).
    """
    op = SzegedyOperator(p)
    arc_basis, weights = op.basis, op.weights

    coo = p_lumped.probabilities.tocoo()
    pairs = tuple((p_lumped.vertices[a], p_lumped.vertices[b]) for a, b in sorted(zip(coo.row.tolist(), coo.col.tolist())))
    position = {pair: k for k, pair in enumerate(pairs)}

    block_of = part.block_of
    amplitudes = np.zeros((len(pairs), len(arc_basis)))
    for a, (i_index, j_index) in enumerate(arc_basis.arcs):
        if weights[a] == 0.0:
            continue
        i, j = p.vertices[i_index], p.vertices[j_index]
        v = block_of[j]
        pair = (block_of[i], v)
        if pair not in position:
            raise BasisMismatch(
                f"Arc ({i}, {j}) maps to {pair}, which is not a lumped arc.",
                witness={"pair": list(pair)},
            )
        amplitudes[position[pair], a] = s.get(i, v) * weights[a]

    states = tuple(WalkerState(arc_basis, row) for row in amplitudes)
    return AggregatedBasis(arc_basis=arc_basis, pairs=pairs, states=states)


def aggregated_phi(basis: AggregatedBasis, p_lumped: StochasticMatrix, u: str) -> WalkerState:
    """``phi_u = sum_v sqrt(Pl_uv) |u, v>``, the lift of the lumped ``phi_u``."""
    row = p_lumped.probabilities[p_lumped.position(u)].tocoo()
    terms = [(math.sqrt(value), basis.state(u, p_lumped.vertices[v])) for v, value in zip(row.col, row.data)]
    return WalkerState(basis.arc_basis, combine(basis.arc_basis, terms).amplitudes)


def verify_reduction(op: SzegedyOperator, basis: AggregatedBasis, lumped_op: SzegedyOperator) -> float:
    """
    Largest deviation from an exact reduction of ``op`` to ``lumped_op``.

    Covers, for every aggregated state ``|u, v>``: the projection
    ``Pi |u, v> = sqrt(Pl_uv) phi_u``, the swap ``S |u, v> = |v, u>`` and the intertwining
    ``U |u, v> = sum c_wz |w, z>`` with ``c_wz`` read off the lumped walk.

    Raises
    ------
    BasisMismatch
        When ``basis`` is not on ``op``'s arcs or the lumped walk leaves the aggregated pairs.
    """
    if basis.arc_basis != op.basis:
        raise BasisMismatch("Aggregated basis was not built from this operator's chain.")
    lumped = lumped_op.matrix
    missing = sorted({x for pair in basis.pairs for x in pair} - set(lumped.vertices))
    if missing:
        raise BasisMismatch(
            f"Block {missing[0]!r} is not a vertex of the lumped walk.",
            witness={"block": missing[0]},
        )
    deviation = 0.0
    for (u, v), state in zip(basis.pairs, basis.states):
        phi = aggregated_phi(basis, lumped, u)
        projected = apply_projection(op, state)
        deviation = max(deviation, projected.distance(math.sqrt(lumped.entry(u, v)) * phi))

        deviation = max(deviation, apply_swap(state).distance(basis.state(v, u)))

        try:
            start = WalkerState.basis_vector(lumped_op.basis, u, v)
        except ArcNotInBasis as exc:
            raise BasisMismatch(f"Lumped walk has no arc ({u}, {v}).", witness={"pair": [u, v]}) from exc
        image = apply_U(lumped_op, start)
        terms = []
        for w, z, coefficient in image.items(tol=COEFFICIENT_FLOOR):
            terms.append((coefficient, basis.state(w, z)))
        expected = combine(basis.arc_basis, terms)
        deviation = max(deviation, apply_U(op, state).distance(expected))
    return float(deviation)

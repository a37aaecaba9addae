"""Strong lumping of stochastic matrices along a vertex partition."""

from __future__ import annotations

import numpy as np
from scipy import sparse

from szl.errors import NotLumpable
from szl.graphs.types import VertexPartition
from szl.markov.types import Distribution, StochasticMatrix

DEFAULT_LUMP_TOL = 1e-10


def _indicator(vertices: tuple[str, ...], part: VertexPartition) -> sparse.csr_matrix:
    """Vertex-by-block 0/1 membership matrix."""
    rows = np.arange(len(vertices))
    cols = np.array([part.label_index[part.block_of[v]] for v in vertices])
    return sparse.csr_matrix((np.ones(len(vertices)), (rows, cols)), shape=(len(vertices), len(part.labels)))


def lump(p: StochasticMatrix, part: VertexPartition, tol: float = DEFAULT_LUMP_TOL) -> StochasticMatrix:
    """
    Lump ``p`` along ``part`` by the row-sum criterion.

    For every block pair ``(u, v)`` the sums ``sum_{j in v} P_ij`` must agree across all
    ``i in u`` within ``tol``; the lumped entry is their mean.

    Raises
    ------
    NotLumpable
        With the first offending ``(u, v, i1, i2)``, scanning blocks ``u`` in order,
        then the vertices of ``u``, then target blocks ``v``.

    Usage example
    -------------
        g = generate("hexahedron")
        lumped = lump(homogeneous_walk(g), distance_partition(g, "000"))
    """
    part.validate_for(p.vertices)
    block_sums = (p.probabilities @ _indicator(p.vertices, part)).toarray()

    lumped = np.zeros((len(part.labels), len(part.labels)))
    for a, (u, block) in enumerate(zip(part.labels, part.blocks)):
        rows = block_sums[[p.index[i] for i in block]]
        deviation = np.abs(rows - rows[0])
        offending = np.argwhere(deviation > tol)
        if offending.size:
            k, b = (int(x) for x in offending[0])
            v = part.labels[b]
            raise NotLumpable(
                f"Vertices {block[0]!r} and {block[k]!r} of block {u} send {rows[0, b]!r} and "
                f"{rows[k, b]!r} into block {v}.",
                witness={"u": u, "v": v, "i1": block[0], "i2": block[k], "sums": [float(rows[0, b]), float(rows[k, b])]},
            )
        lumped[a] = rows.mean(axis=0)
    lumped[np.abs(lumped) <= tol] = 0.0
    lumped /= lumped.sum(axis=1, keepdims=True)
    return StochasticMatrix.from_dense(part.labels, lumped)


def lump_distribution(dist: Distribution, part: VertexPartition) -> Distribution:
    """Aggregate a distribution onto blocks: ``pi_u = sum_{i in u} pi_i``."""
    part.validate_for(dist.vertices)
    totals = dist.probabilities @ _indicator(dist.vertices, part).toarray()
    return Distribution(vertices=part.labels, probabilities=totals)

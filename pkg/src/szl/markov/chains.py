"""Walks on graphs, birth-death chains and classical evolution."""

from __future__ import annotations

from scipy import sparse

from szl.errors import DimensionMismatch, InvalidParams, SinkVertex
from szl.graphs.types import DirectedGraph
from szl.markov.types import BirthDeathChain, Distribution, StochasticMatrix


def homogeneous_walk(g: DirectedGraph) -> StochasticMatrix:
    """
    Uniform walk: ``P_ij = 1 / outdeg(i)`` for every arc ``(i, j)``.

    Raises
    ------
    SinkVertex
        When some vertex has no outgoing arc.
    """
    for v in g.vertices:
        if not g.successors[v]:
            raise SinkVertex(f"Vertex {v!r} has out-degree 0.", witness={"vertex": v})
    rows = [g.index[i] for i, _ in g.arcs]
    cols = [g.index[j] for _, j in g.arcs]
    data = [1.0 / len(g.successors[i]) for i, _ in g.arcs]
    n = len(g.vertices)
    return StochasticMatrix(vertices=g.vertices, probabilities=sparse.csr_matrix((data, (rows, cols)), shape=(n, n)))


def birth_death_matrix(c: BirthDeathChain) -> StochasticMatrix:
    """Tridiagonal matrix of ``c`` on the path vertices ``"0" .. str(n-1)``."""
    n = c.size
    rows, cols, data = [], [], []
    for k in range(n):
        for target, value in ((k - 1, c.q[k]), (k, c.r[k]), (k + 1, c.p[k])):
            if 0 <= target < n and value > 0.0:
                rows.append(k)
                cols.append(target)
                data.append(value)
    matrix = sparse.csr_matrix((data, (rows, cols)), shape=(n, n))
    return StochasticMatrix(vertices=tuple(str(k) for k in range(n)), probabilities=matrix)


def ehrenfest_chain(n: int) -> BirthDeathChain:
    """Ehrenfest urn with ``n`` balls: ``q_k = k/n``, ``p_k = 1 - k/n`` on states ``0 .. n``."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidParams(f"n must be an integer >= 1, got {n!r}.", witness={"n": n})
    states = range(n + 1)
    return BirthDeathChain(
        p=tuple(1.0 - k / n for k in states),
        q=tuple(k / n for k in states),
        r=tuple(0.0 for _ in states),
    )


def half_line_chain(degree: int, length: int) -> BirthDeathChain:
    """
    Radial walk of a ``degree``-regular tree cut at distance ``length``.

    ``p_0 = 1``; inside, ``p_k = (d-1)/d`` and ``q_k = 1/d``; the last state reflects.

    Usage example
    -------------
        half_line_chain(4, 7)  # the radial walk of the F2 Cayley ball of radius 7
    """
    if isinstance(degree, bool) or not isinstance(degree, int) or degree < 2:
        raise InvalidParams(
            f"degree must be an integer >= 2, got {degree!r}.",
            witness={"degree": degree},
        )
    if isinstance(length, bool) or not isinstance(length, int) or length < 1:
        raise InvalidParams(
            f"length must be an integer >= 1, got {length!r}.",
            witness={"length": length},
        )
    up = (degree - 1) / degree
    down = 1.0 / degree
    p = [1.0] + [up] * (length - 1) + [0.0]
    q = [0.0] + [down] * (length - 1) + [1.0]
    return BirthDeathChain(p=tuple(p), q=tuple(q), r=tuple(0.0 for _ in p))


def classical_evolve(p: StochasticMatrix, dist: Distribution, steps: int) -> Distribution:
    """Return ``dist . P^steps`` (row vector times matrix)."""
    if dist.vertices != p.vertices:
        raise DimensionMismatch(
            "Distribution vertices differ from the matrix vertices.",
            witness={"matrix": len(p.vertices), "distribution": len(dist.vertices)},
        )
    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 0:
        raise InvalidParams(
            f"steps must be a nonnegative integer, got {steps!r}.",
            witness={"steps": steps},
        )
    transposed = p.probabilities.T.tocsr()
    vector = dist.probabilities.copy()
    for _ in range(steps):
        vector = transposed @ vector
    return Distribution(vertices=dist.vertices, probabilities=vector)

"""
Linking coefficients ``s_iv`` by constraint propagation.

Nodes of the constraint graph are pairs ``(i, v)`` with ``i`` a vertex and ``v`` a block that
``i`` reaches. Two kinds of edges carry multiplicative constraints on ``t = s^2``:

* ``(i, v) -- (i, w)``: ``t_iw = t_iv * Pl_uv / Pl_uw`` for ``i`` in ``u``;
* ``(i, v) -- (j, u)``: ``t_ju = t_iv * P_ij / P_ji`` for ``i`` in ``u``, ``j`` in ``v``.

Each connected component is seeded with ``t = 1``, filled in breadth-first order, checked on
every closing edge and finally rescaled so that ``Pl_uv * sum_{i in u} s_iv^2 = 1``.
"""

from __future__ import annotations

import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Optional

import networkx as nx

from szl.errors import DimensionMismatch, InconsistentConstraints, NormalizationImpossible, UnknownVertex
from szl.graphs.types import VertexPartition
from szl.markov.types import StochasticMatrix

logger = logging.getLogger(__name__)

DEFAULT_LINKING_TOL = 1e-9

Node = tuple[str, str]


@dataclass(frozen=True)
class LinkingCoefficients:
    """
    Nonnegative ``s_iv`` for every vertex ``i`` and block ``v`` that ``i`` reaches.

    Parameters
    ----------
    entries
        ``(i, v, s_iv)`` triples in vertex order, then block order.
    components
        Number of connected components of the constraint graph.
    """

    entries: tuple[tuple[str, str, float], ...]
    components: int = 1

    def __post_init__(self) -> None:
        for i, v, value in self.entries:
            if value < 0.0 or math.isnan(value):
                raise ValueError(f"Linking coefficient s[{i}, {v}] = {value!r} must be nonnegative.")

    @cached_property
    def values(self) -> dict[Node, float]:
        return {(i, v): value for i, v, value in self.entries}

    def get(self, i: str, v: str) -> float:
        try:
            return self.values[(i, v)]
        except KeyError as exc:
            raise UnknownVertex(f"No linking coefficient for ({i}, {v}).", witness={"node": [i, v]}) from exc

    def __len__(self) -> int:
        return len(self.entries)


def _lumped_entry(p_lumped: StochasticMatrix, u: str, v: str) -> float:
    value = p_lumped.entry(u, v)
    if value <= 0.0:
        raise NormalizationImpossible(
            f"Lumped probability {u}->{v} is zero although a vertex of {u} reaches {v}.",
            witness={"u": u, "v": v},
        )
    return value


def _constraint_graph(p: StochasticMatrix, part: VertexPartition, p_lumped: StochasticMatrix) -> nx.Graph:
    block_of = part.block_of
    order = part.label_index
    graph = nx.Graph()

    for k, i in enumerate(p.vertices):
        u = block_of[i]
        reached = sorted({block_of[p.vertices[j]] for j in p.successors[k]}, key=order.__getitem__)
        graph.add_nodes_from((i, v) for v in reached)
        for v, w in zip(reached, reached[1:]):
            ratio = _lumped_entry(p_lumped, u, v) / _lumped_entry(p_lumped, u, w)
            graph.add_edge((i, v), (i, w), src=(i, v), ratio=ratio)

    for k, i in enumerate(p.vertices):
        for j_index, forward in p.successors[k].items():
            if j_index == k:
                continue
            backward = p.successors[j_index].get(k, 0.0)
            j = p.vertices[j_index]
            if backward <= 0.0:
                raise InconsistentConstraints(
                    f"P[{i}, {j}] > 0 but P[{j}, {i}] = 0; the chain is not weakly reversible.",
                    witness={"edge": [[i, block_of[j]], [j, block_of[i]]], "P_ij": forward, "P_ji": 0.0},
                )
            if j_index < k:
                continue
            source = (i, block_of[j])
            graph.add_edge(source, (j, block_of[i]), src=source, ratio=forward / backward)
    return graph


def _carry(value: float, start: Node, data: dict[str, Any]) -> float:
    return value * data["ratio"] if start == data["src"] else value / data["ratio"]


def _propagate(graph: nx.Graph, seed: Optional[Node]) -> tuple[dict[Node, float], list[list[Node]]]:
    squares: dict[Node, float] = {}
    components: list[list[Node]] = []
    starts = ([seed] if seed is not None else []) + list(graph.nodes)
    for start in starts:
        if start in squares:
            continue
        squares[start] = 1.0
        members = [start]
        for a, b in nx.bfs_edges(graph, start):
            squares[b] = _carry(squares[a], a, graph.edges[a, b])
            members.append(b)
        components.append(members)
    return squares, components


def _check_closing_edges(graph: nx.Graph, squares: dict[Node, float], tol: float) -> None:
    for a, b, data in graph.edges(data=True):
        source = data["src"]
        target = b if source == a else a
        required = squares[source] * data["ratio"]
        found = squares[target]
        if abs(found - required) > tol * max(found, required):
            raise InconsistentConstraints(
                f"Closing edge {list(source)} -- {list(target)} propagates {found!r}, requires {required!r}.",
                witness={"edge": [list(source), list(target)], "propagated": found, "required": required},
            )


def _normalize(
    components: list[list[Node]],
    squares: dict[Node, float],
    part: VertexPartition,
    p_lumped: StochasticMatrix,
    tol: float,
) -> dict[Node, float]:
    block_of = part.block_of
    sums: list[dict[tuple[str, str], float]] = []
    shared: dict[tuple[str, str], int] = defaultdict(int)
    for members in components:
        totals: dict[tuple[str, str], float] = defaultdict(float)
        for i, v in members:
            totals[(block_of[i], v)] += squares[(i, v)]
        sums.append(totals)
        for pair in totals:
            shared[pair] += 1

    scaled: dict[Node, float] = {}
    for members, totals in zip(components, sums):
        norms = {pair: p_lumped.entry(*pair) * total for pair, total in totals.items()}
        reference_pair, reference = next(iter(norms.items()))
        copies = shared[reference_pair]
        for pair, norm in norms.items():
            if abs(norm - reference) > tol * max(norm, reference) or shared[pair] != copies:
                raise NormalizationImpossible(
                    f"Block pairs {list(reference_pair)} and {list(pair)} cannot be normalized together.",
                    witness={"pairs": [list(reference_pair), list(pair)], "norms": [reference, norm]},
                )
        scale = 1.0 / (copies * reference)
        for node in members:
            scaled[node] = squares[node] * scale
    return scaled


def solve_linking(
    p: StochasticMatrix,
    part: VertexPartition,
    p_lumped: StochasticMatrix,
    tol: float = DEFAULT_LINKING_TOL,
    *,
    seed: Optional[Node] = None,
) -> LinkingCoefficients:
    """
    Solve for the canonical nonnegative linking coefficients.

    Parameters
    ----------
    p, part, p_lumped
        Chain, partition and ``lump(p, part)``.
    tol
        Relative tolerance of the closing-edge and normalization checks on ``s^2``.
    seed
        Node ``(i, v)`` whose component is seeded first; the result does not depend on it.

    Raises
    ------
    InconsistentConstraints
        A closing edge disagrees with the propagated values, or the chain is not weakly reversible.
    NormalizationImpossible
        The normalization of some component cannot hold for all of its block pairs.

    Usage example
    -------------
        s = solve_linking(p, part, lump(p, part))
        s.get("001", "C")  # 1 / sqrt(2) on the distance-lumped cube
    """
    part.validate_for(p.vertices)
    if p_lumped.vertices != part.labels:
        raise DimensionMismatch(
            "Lumped matrix vertices must be the partition's block labels.",
            witness={"lumped": list(p_lumped.vertices), "labels": list(part.labels)},
        )
    graph = _constraint_graph(p, part, p_lumped)
    if seed is not None and seed not in graph:
        raise UnknownVertex(f"Seed {seed} is not a constraint node.", witness={"node": list(seed)})

    squares, components = _propagate(graph, seed)
    _check_closing_edges(graph, squares, tol)
    if len(components) > 1:
        logger.warning("Linking constraint graph has %d components; normalizing each separately.", len(components))
    normalized = _normalize(components, squares, part, p_lumped, tol)

    entries = tuple((i, v, math.sqrt(normalized[(i, v)])) for i, v in graph.nodes)
    return LinkingCoefficients(entries=entries, components=len(components))

"""Coarsening, distance partitions and equitable-partition detection."""

from __future__ import annotations

import networkx as nx

from szl.errors import DisconnectedGraph, NotEquitable, UnknownVertex
from szl.graphs.types import DirectedGraph, EquitableTable, Vertex, VertexPartition


def coarsen(g: DirectedGraph, part: VertexPartition) -> DirectedGraph:
    """
    Project ``g`` onto the blocks of ``part``.

    Block ``u`` has an arc to block ``v`` iff some vertex of ``u`` has an arc into ``v``;
    self-loops appear whenever a block contains an internal arc.

    Usage example
    -------------
        path = coarsen(hypercube(3), distance_partition(hypercube(3), "000"))
    """
    part.validate_for(g.vertices)
    block_of = part.block_of
    projected = {(block_of[i], block_of[j]) for i, j in g.arcs}
    return DirectedGraph.build(part.labels, projected)


def distance_partition(g: DirectedGraph, root: Vertex) -> VertexPartition:
    """
    Group vertices by their shortest-path distance from ``root``, ignoring arc direction.

    Blocks are ordered by distance and keep the graph's vertex order inside each block.
    """
    if root not in g.index:
        raise UnknownVertex(f"Root {root!r} is not a vertex.", witness={"vertex": root})

    undirected = nx.Graph()
    undirected.add_nodes_from(g.vertices)
    undirected.add_edges_from(g.arcs)
    distances = nx.single_source_shortest_path_length(undirected, root)

    unreachable = [v for v in g.vertices if v not in distances]
    if unreachable:
        raise DisconnectedGraph(
            f"Vertex {unreachable[0]!r} is unreachable from {root!r}.",
            witness={"root": root, "vertex": unreachable[0]},
        )

    spheres: list[list[Vertex]] = [[] for _ in range(max(distances.values()) + 1)]
    for v in g.vertices:
        spheres[distances[v]].append(v)
    return VertexPartition(blocks=tuple(tuple(sphere) for sphere in spheres))


def equitable_table(g: DirectedGraph, part: VertexPartition) -> EquitableTable:
    """
    Return the neighbour-count table ``d_uv`` of an equitable partition.

    Raises
    ------
    NotEquitable
        With the first pair of vertices of one block (in partition order) whose numbers
        of neighbours in some block differ.
    """
    part.validate_for(g.vertices)
    block_of = part.block_of

    counts: dict[tuple[str, str], int] = {}
    valency: dict[str, int] = {}
    for u, block in zip(part.labels, part.blocks):
        reference: dict[str, int] | None = None
        first = block[0]
        for i in block:
            row = {v: 0 for v in part.labels}
            for j in g.successors[i]:
                row[block_of[j]] += 1
            if reference is None:
                reference = row
                continue
            for v in part.labels:
                if row[v] != reference[v]:
                    raise NotEquitable(
                        f"Vertices {first!r} and {i!r} of block {u} have {reference[v]} and {row[v]} "
                        f"neighbours in block {v}.",
                        witness={"block": u, "target_block": v, "vertices": [first, i]},
                    )
        assert reference is not None
        for v, d in reference.items():
            if d:
                counts[(u, v)] = d
        valency[u] = sum(reference.values())

    return EquitableTable(labels=part.labels, counts=counts, valency=valency)

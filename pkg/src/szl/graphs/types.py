"""Immutable graph and partition types shared by every other module."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

import networkx as nx

from szl.errors import InvalidPartition, UnknownVertex

Vertex = str
Arc = tuple[str, str]


def block_labels(count: int) -> tuple[str, ...]:
    """
    Spreadsheet-style block labels: A, B, ..., Z, AA, AB, ...

    Usage example
    -------------
        block_labels(3)  # ("A", "B", "C")
    """
    labels: list[str] = []
    for index in range(count):
        label = ""
        n = index + 1
        while n > 0:
            n, rem = divmod(n - 1, 26)
            label = chr(ord("A") + rem) + label
        labels.append(label)
    return tuple(labels)


@dataclass(frozen=True)
class DirectedGraph:
    """
    Labeled directed graph; self-loops allowed, arcs ordered by (source, target) index.

    Parameters
    ----------
    vertices
        Vertex labels in canonical order.
    arcs
        Ordered vertex pairs. Use :meth:`build` to sort and validate arbitrary input.
    """

    vertices: tuple[Vertex, ...]
    arcs: tuple[Arc, ...]

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("DirectedGraph vertices must be unique.")
        known = set(self.vertices)
        seen: set[Arc] = set()
        for arc in self.arcs:
            if arc[0] not in known or arc[1] not in known:
                raise UnknownVertex(
                    f"Arc {arc} has an endpoint outside the vertex list.",
                    witness={"arc": list(arc)},
                )
            if arc in seen:
                raise ValueError(f"Duplicate arc {arc}.")
            seen.add(arc)

    @classmethod
    def build(cls, vertices: Iterable[Vertex], arcs: Iterable[Arc]) -> "DirectedGraph":
        """Create a graph with arcs sorted by the vertex order."""
        ordered = tuple(vertices)
        index = {v: k for k, v in enumerate(ordered)}
        arc_list = [(str(i), str(j)) for i, j in arcs]
        for i, j in arc_list:
            if i not in index or j not in index:
                raise UnknownVertex(
                    f"Arc ({i}, {j}) has an endpoint outside the vertex list.",
                    witness={"arc": [i, j]},
                )
        return cls(vertices=ordered, arcs=tuple(sorted(arc_list, key=lambda a: (index[a[0]], index[a[1]]))))

    @cached_property
    def index(self) -> dict[Vertex, int]:
        return {v: k for k, v in enumerate(self.vertices)}

    @cached_property
    def successors(self) -> dict[Vertex, tuple[Vertex, ...]]:
        out: dict[Vertex, list[Vertex]] = {v: [] for v in self.vertices}
        for i, j in self.arcs:
            out[i].append(j)
        return {v: tuple(targets) for v, targets in out.items()}

    @cached_property
    def arc_set(self) -> frozenset[Arc]:
        return frozenset(self.arcs)

    def has_arc(self, i: Vertex, j: Vertex) -> bool:
        return (i, j) in self.arc_set

    def out_degree(self, v: Vertex) -> int:
        if v not in self.index:
            raise UnknownVertex(f"Unknown vertex {v!r}.", witness={"vertex": v})
        return len(self.successors[v])

    def is_symmetric(self) -> bool:
        """True when every arc comes with its reversal."""
        return all((j, i) in self.arc_set for i, j in self.arcs)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.arcs)
        return graph


@dataclass(frozen=True)
class VertexPartition:
    """
    Ordered disjoint blocks of vertices, each with a label.

    Parameters
    ----------
    blocks
        Nonempty, pairwise disjoint vertex tuples, in block order.
    labels
        Block labels; spreadsheet labels (A, B, ...) when omitted.

    Usage example
    -------------
        part = VertexPartition(blocks=(("000",), ("001", "010", "100")))
        part.block_of["010"]  # "B"
    """

    blocks: tuple[tuple[Vertex, ...], ...]
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.labels:
            object.__setattr__(self, "labels", block_labels(len(self.blocks)))
        if len(self.labels) != len(self.blocks):
            raise InvalidPartition(
                f"{len(self.labels)} labels for {len(self.blocks)} blocks.",
                witness={"labels": list(self.labels)},
            )
        if len(set(self.labels)) != len(self.labels):
            raise InvalidPartition(
                "Block labels must be unique.",
                witness={"labels": list(self.labels)},
            )
        seen: dict[Vertex, str] = {}
        for label, block in zip(self.labels, self.blocks):
            if not block:
                raise InvalidPartition(f"Block {label} is empty.", witness={"block": label})
            for v in block:
                if v in seen:
                    raise InvalidPartition(
                        f"Vertex {v!r} is in blocks {seen[v]} and {label}.",
                        witness={"vertex": v, "blocks": [seen[v], label]},
                    )
                seen[v] = label

    @classmethod
    def singletons(cls, vertices: Iterable[Vertex]) -> "VertexPartition":
        """One block per vertex, labelled by the vertex itself."""
        ordered = tuple(vertices)
        return cls(blocks=tuple((v,) for v in ordered), labels=ordered)

    @cached_property
    def block_of(self) -> dict[Vertex, str]:
        return {v: label for label, block in zip(self.labels, self.blocks) for v in block}

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {label: k for k, label in enumerate(self.labels)}

    def block(self, label: str) -> tuple[Vertex, ...]:
        try:
            return self.blocks[self.label_index[label]]
        except KeyError as exc:
            raise InvalidPartition(f"Unknown block {label!r}.", witness={"block": label}) from exc

    def size(self, label: str) -> int:
        return len(self.block(label))

    def validate_for(self, vertices: Iterable[Vertex]) -> None:
        """Raise InvalidPartition unless the blocks cover exactly ``vertices``."""
        expected = list(vertices)
        missing = [v for v in expected if v not in self.block_of]
        if missing:
            raise InvalidPartition(
                f"Vertex {missing[0]!r} is in no block.",
                witness={"vertex": missing[0]},
            )
        known = set(expected)
        extra = [v for v in self.block_of if v not in known]
        if extra:
            raise InvalidPartition(
                f"Block vertex {extra[0]!r} is not a graph vertex.",
                witness={"vertex": extra[0]},
            )


@dataclass(frozen=True)
class EquitableTable:
    """
    Neighbour counts of an equitable partition.

    Parameters
    ----------
    labels
        Block labels in partition order.
    counts
        ``d_uv`` for every block pair with at least one neighbour (zero pairs omitted).
    valency
        ``d_u``, the out-degree shared by all vertices of block ``u``.
    """

    labels: tuple[str, ...]
    counts: Mapping[tuple[str, str], int]
    valency: Mapping[str, int]

    def __post_init__(self) -> None:
        for u in self.labels:
            total = sum(d for (a, _), d in self.counts.items() if a == u)
            if total != self.valency.get(u, 0):
                raise ValueError(f"Valency of block {u} is {self.valency.get(u)} but its counts sum to {total}.")
        if any(d < 0 for d in self.counts.values()):
            raise ValueError("Neighbour counts must be nonnegative.")

    def count(self, u: str, v: str) -> int:
        """Return ``d_uv`` (0 when vertices of ``u`` have no neighbour in ``v``)."""
        return int(self.counts.get((u, v), 0))

    def is_edge_count_symmetric(self, sizes: Mapping[str, int]) -> bool:
        """Check ``d_uv |u| = d_vu |v|`` for every block pair (undirected graphs)."""
        return all(
            self.count(u, v) * sizes[u] == self.count(v, u) * sizes[v] for u in self.labels for v in self.labels
        )

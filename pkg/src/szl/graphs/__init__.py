"""Graphs, vertex partitions, coarsening and the generated graph families."""

from .generators import FAMILIES, canonical_root, generate
from .ops import coarsen, distance_partition, equitable_table
from .types import DirectedGraph, EquitableTable, VertexPartition, block_labels

__all__ = [
    "FAMILIES",
    "DirectedGraph",
    "EquitableTable",
    "VertexPartition",
    "block_labels",
    "canonical_root",
    "coarsen",
    "distance_partition",
    "equitable_table",
    "generate",
]

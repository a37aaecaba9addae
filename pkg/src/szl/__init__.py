"""szl package."""

from .graphs import DirectedGraph, VertexPartition, distance_partition, generate
from .markov import StochasticMatrix, homogeneous_walk, lump
from .szegedy import SzegedyOperator, WalkerState, apply_U, phi_vector

__all__ = [
    "DirectedGraph",
    "StochasticMatrix",
    "SzegedyOperator",
    "VertexPartition",
    "WalkerState",
    "apply_U",
    "distance_partition",
    "generate",
    "homogeneous_walk",
    "lump",
    "phi_vector",
]

"""Stochastic matrices, strong lumping and birth-death chains."""

from .chains import birth_death_matrix, classical_evolve, ehrenfest_chain, half_line_chain, homogeneous_walk
from .lumping import DEFAULT_LUMP_TOL, lump, lump_distribution
from .types import BirthDeathChain, Distribution, StochasticMatrix

__all__ = [
    "DEFAULT_LUMP_TOL",
    "BirthDeathChain",
    "Distribution",
    "StochasticMatrix",
    "birth_death_matrix",
    "classical_evolve",
    "ehrenfest_chain",
    "half_line_chain",
    "homogeneous_walk",
    "lump",
    "lump_distribution",
]

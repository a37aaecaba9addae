"""Entanglement diagnostics and time evolution of walker states."""

from .entropy import (
    DensityMatrix,
    entanglement_entropy,
    expand_spectrum,
    hypercube_entropy_spectrum,
    reduce_density_coin,
    von_neumann_entropy,
)
from .evolution import position_distribution, simulate_quantum

__all__ = [
    "DensityMatrix",
    "entanglement_entropy",
    "expand_spectrum",
    "hypercube_entropy_spectrum",
    "position_distribution",
    "reduce_density_coin",
    "simulate_quantum",
    "von_neumann_entropy",
]

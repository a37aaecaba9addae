"""Position measurement and time evolution of walker states."""

from __future__ import annotations

import numpy as np

from szl.errors import InvalidParams, NormDrift
from szl.markov.types import Distribution
from szl.szegedy.basis import WalkerState
from szl.szegedy.operator import SzegedyOperator, operator_sparse

NORM_DRIFT_TOL = 1e-9


def _positions(s: WalkerState, amplitudes: np.ndarray) -> Distribution:
    arcs = s.basis
    weights = np.bincount(arcs.sources, weights=amplitudes**2, minlength=len(arcs.vertices))
    total = float(weights.sum())
    if abs(total - 1.0) > NORM_DRIFT_TOL:
        raise NormDrift(
            f"Position weights sum to {total!r}, not 1.",
            witness={"sum": total},
        )
    return Distribution(vertices=arcs.vertices, probabilities=weights / total)


def position_distribution(s: WalkerState) -> Distribution:
    """
    Probability of each position: ``prob(i) = sum_j amp(i, j)^2``.

    Raises
    ------
    NormDrift
        When the weights sum more than ``1e-9`` away from 1.
    """
    return _positions(s, s.amplitudes)


def simulate_quantum(op: SzegedyOperator, s0: WalkerState, steps: int) -> list[Distribution]:
    """
    Position distributions of ``U^t s0`` for ``t = 0 .. steps``.

    Raises
    ------
    NormDrift
        When the state norm moves more than ``1e-9`` away from its starting value.

    Usage example
    -------------
        series = simulate_quantum(op, phi_vector(op, "A"), steps=10)
        series[1].get("B")
    """
    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 0:
        raise InvalidParams(
            f"steps must be a nonnegative integer, got {steps!r}.",
            witness={"steps": steps},
        )
    op.check(s0)
    step = operator_sparse(op)
    amplitudes = s0.amplitudes.copy()
    start = float(np.linalg.norm(amplitudes))
    series = [_positions(s0, amplitudes)]
    for t in range(1, steps + 1):
        amplitudes = step @ amplitudes
        drift = abs(float(np.linalg.norm(amplitudes)) - start)
        if drift > NORM_DRIFT_TOL:
            raise NormDrift(
                f"Norm drifted by {drift!r} at step {t}.",
                witness={"step": t, "drift": drift},
            )
        series.append(_positions(s0, amplitudes))
    return series

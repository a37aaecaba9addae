"""
CMV bases of a walk: orthonormalization of ``e0, U e0, U^-1 e0, U^2 e0, ...`` and the
two-step recurrence for a coin-invariant starting vector.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from szl.cmv.types import CmvMatrix, VerblunskySequence
from szl.errors import NotCoinInvariant, NotUnit
from szl.szegedy.basis import UNIT_TOL, WalkerState

DEFAULT_DEP_TOL = 1e-8

StateMap = Callable[[WalkerState], WalkerState]


def _orthogonalize(vector: np.ndarray, basis: list[np.ndarray]) -> np.ndarray:
    """Modified Gram-Schmidt against ``basis`` with one re-orthogonalization pass."""
    residual = np.array(vector, dtype=float)
    for _ in range(2):
        for e in basis:
            residual -= (e @ residual) * e
    return residual


def _require_unit(e0: WalkerState) -> None:
    norm = e0.norm()
    if abs(norm - 1.0) > UNIT_TOL:
        raise NotUnit(f"Starting vector has norm {norm!r}.", witness={"norm": norm})


def cmv_orthonormalize(
    apply_u: StateMap,
    apply_u_inverse: StateMap,
    e0: WalkerState,
    dep_tol: float = DEFAULT_DEP_TOL,
) -> tuple[tuple[WalkerState, ...], CmvMatrix]:
    """
    Build the CMV basis of the cyclic subspace of ``e0`` and the matrix ``C_mn = <e_m, U e_n>``.

    Forward candidates (``U`` applied to the last forward vector) alternate with backward ones
    (``U^-1`` applied to the last backward vector). A candidate whose residual is below
    ``dep_tol`` times its norm retires its direction; the other one continues alone. New vectors
    are normalized residuals, so their inner product with the generating residual is positive.

    Raises
    ------
    NotUnit
        When ``e0`` is not a unit vector.

    Usage example
    -------------
        basis, c = cmv_orthonormalize(
            lambda s: apply_U(op, s), lambda s: apply_U_inverse(op, s), phi_vector(op, "A")
        )
    """
    _require_unit(e0)
    arcs = e0.basis
    vectors = [e0.amplitudes / e0.norm()]
    states = [WalkerState(arcs, vectors[0])]
    last = {True: states[0], False: states[0]}
    alive = {True: True, False: True}
    forward = True

    while alive[True] or alive[False]:
        if alive[forward]:
            step = apply_u if forward else apply_u_inverse
            candidate = step(last[forward]).amplitudes
            residual = _orthogonalize(candidate, vectors)
            norm = float(np.linalg.norm(residual))
            if norm < dep_tol * max(float(np.linalg.norm(candidate)), 1.0):
                alive[forward] = False
            else:
                vectors.append(residual / norm)
                states.append(WalkerState(arcs, vectors[-1]))
                last[forward] = states[-1]
        forward = not forward

    images = np.vstack([apply_u(s).amplitudes for s in states])
    return tuple(states), CmvMatrix(np.vstack(vectors) @ images.T)


def verblunsky_via_recurrence(
    apply_s: StateMap,
    apply_r: StateMap,
    e0: WalkerState,
    dep_tol: float = DEFAULT_DEP_TOL,
) -> tuple[VerblunskySequence, tuple[WalkerState, ...]]:
    """
    Verblunsky coefficients of a coin-invariant ``e0`` without forming ``C``.

    Alternately ``S e_2k = alpha_2k e_2k + rho_2k e_2k+1`` and
    ``R e_2k+1 = alpha_2k+1 e_2k+1 + rho_2k+1 e_2k+2``; the residual norm is ``rho``.
    The walk stops at the first residual below ``dep_tol``, keeping that last ``alpha``.

    Raises
    ------
    NotCoinInvariant
        When ``R e0`` differs from ``e0`` by more than ``dep_tol``.
    InvalidSequence
        When the last coefficient is not ``+-1`` within ``1e-9``.
    """
    _require_unit(e0)
    drift = apply_r(e0).distance(e0)
    if drift > dep_tol:
        raise NotCoinInvariant(f"R e0 differs from e0 by {drift!r}.", witness={"drift": drift})

    arcs = e0.basis
    vectors = [e0.amplitudes / e0.norm()]
    states = [WalkerState(arcs, vectors[0])]
    alphas: list[float] = []
    while True:
        step = apply_s if len(alphas) % 2 == 0 else apply_r
        image = step(states[-1]).amplitudes
        alphas.append(float(vectors[-1] @ image))
        residual = _orthogonalize(image, vectors)
        rho = float(np.linalg.norm(residual))
        if rho < dep_tol or len(vectors) == len(arcs):
            break
        vectors.append(residual / rho)
        states.append(WalkerState(arcs, vectors[-1]))
    return VerblunskySequence(tuple(alphas)), tuple(states)

"""CMV matrices from Verblunsky coefficients and back."""

from __future__ import annotations

import numpy as np

from szl.cmv.types import CmvMatrix, VerblunskySequence
from szl.errors import InvalidSequence, NotCmvShaped

EXTRACTION_TOL = 1e-8
RHO_FLOOR = 1e-12
EIGENSPACE_TOL = 1e-8


def _theta(alpha: float, rho: float) -> np.ndarray:
    return np.array([[alpha, rho], [rho, -alpha]])


def lm_factors(v: VerblunskySequence) -> tuple[np.ndarray, np.ndarray]:
    """
    Return ``(L, M)`` with ``L = Theta_0 + Theta_2 + ...`` and ``M = 1 + Theta_1 + Theta_3 + ...``.

    The blocks are laid out in size ``n + 1`` and cut back to ``n``; the last block is
    diagonal because ``rho_{n-1} = 0``, so the cut keeps ``alpha_{n-1}`` on the diagonal.
    """
    n = len(v)
    factors = (np.eye(n + 1), np.eye(n + 1))
    for k in range(n):
        factors[k % 2][k : k + 2, k : k + 2] = _theta(v.alpha(k), v.rho(k))
    return factors[0][:n, :n], factors[1][:n, :n]


def build_cmv_matrix(v: VerblunskySequence) -> CmvMatrix:
    """
    ``C = L M`` for a finite sequence.

    Usage example
    -------------
        build_cmv_matrix(VerblunskySequence((0.0, -1 / 3, 1.0))).entries
    """
    ell, em = lm_factors(v)
    return CmvMatrix(ell @ em)


def verblunsky_from_cmv_matrix(c: CmvMatrix) -> VerblunskySequence:
    """
    Read the coefficients off the band of ``c``.

    ``alpha_0 = C_00`` and ``rho_0 = C_10``; odd ``m`` use ``C_{m-1, m} = rho_{m-1} alpha_m``
    and even ``m`` use ``C_{m, m-1} = alpha_m rho_{m-1}``. The result is rebuilt and compared
    entrywise with ``c``.

    Raises
    ------
    NotCmvShaped
        On a vanishing ``rho`` before the end, an inadmissible coefficient, or when the
        rebuilt matrix differs from ``c`` by more than ``1e-8``.
    """
    entries = c.entries
    n = c.size
    alphas = [float(entries[0, 0])]
    rhos = [float(entries[1, 0])] if n > 1 else []
    for m in range(1, n):
        rho_prev = rhos[m - 1]
        if rho_prev < RHO_FLOOR:
            raise NotCmvShaped(
                f"rho_{m - 1} = {rho_prev!r} vanishes before the end of the matrix.",
                witness={"index": m - 1, "rho": rho_prev},
            )
        band = entries[m - 1, m] if m % 2 else entries[m, m - 1]
        alpha = float(band) / rho_prev
        alphas.append(alpha)
        rhos.append(float(np.sqrt(max(0.0, 1.0 - alpha * alpha))))

    try:
        sequence = VerblunskySequence(tuple(alphas))
    except InvalidSequence as exc:
        raise NotCmvShaped(f"Band entries give an inadmissible sequence: {exc}", witness=exc.witness) from exc

    deviation = float(np.max(np.abs(build_cmv_matrix(sequence).entries - entries)))
    if deviation > EXTRACTION_TOL:
        raise NotCmvShaped(
            f"Matrix differs from the CMV matrix of its band by {deviation!r}.",
            witness={"max_deviation": deviation},
        )
    return sequence


def restricted_symmetric_part(c: CmvMatrix, m: np.ndarray) -> np.ndarray:
    """
    Eigenvalues of ``(C + C^T) / 2`` on the eigenvalue-1 eigenspace of ``M``, ascending.

    That eigenspace is invariant under ``(C + C^T) / 2`` for real coefficients, and the
    restriction is unitarily equivalent to the Jacobi matrix of the sequence.
    """
    values, vectors = np.linalg.eigh(np.asarray(m, dtype=float))
    q = vectors[:, np.abs(values - 1.0) <= EIGENSPACE_TOL]
    symmetric = 0.5 * (c.entries + c.entries.T)
    return np.linalg.eigvalsh(q.T @ symmetric @ q)

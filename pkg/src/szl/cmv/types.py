from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from szl.errors import InvalidSequence, NotCmvShaped

BOUNDARY_TOL = 1e-9
STRUCTURE_TOL = 1e-10


@dataclass(frozen=True)
class VerblunskySequence:
    """
    Real Verblunsky coefficients ``alpha_0 .. alpha_{n-1}`` of a finite CMV model.

    The convention ``alpha_{-1} = -1`` is implicit. Inner coefficients satisfy
    ``|alpha_k| < 1``; the last one is ``+1`` or ``-1`` and is stored exactly.

    Parameters
    ----------
    alphas
        The coefficients. A last entry within ``1e-9`` of ``+-1`` is snapped to it.
    boundary_trusted_up_to
        Largest index unaffected by truncation of an infinite model; ``None`` when all are exact.

    Usage example
    -------------
        v = VerblunskySequence((0.0, -1 / 3, 0.0, 1 / 3, 0.0, 1.0))
        v.rho(1)  # sqrt(8) / 3
    """

    alphas: tuple[float, ...]
    boundary_trusted_up_to: Optional[int] = None

    def __post_init__(self) -> None:
        alphas = tuple(float(a) for a in self.alphas)
        if not alphas:
            raise InvalidSequence("A Verblunsky sequence needs at least one coefficient.")
        for k, a in enumerate(alphas[:-1]):
            if not abs(a) < 1.0:
                raise InvalidSequence(
                    f"|alpha_{k}| = {abs(a)!r} must be < 1.",
                    witness={"index": k, "alpha": a},
                )
        last = alphas[-1]
        if abs(abs(last) - 1.0) > BOUNDARY_TOL:
            raise InvalidSequence(
                f"Last coefficient alpha_{len(alphas) - 1} = {last!r} must be +-1.",
                witness={"index": len(alphas) - 1, "alpha": last},
            )
        object.__setattr__(self, "alphas", alphas[:-1] + (float(np.sign(last)),))
        if self.boundary_trusted_up_to is not None and self.boundary_trusted_up_to < -1:
            raise InvalidSequence("boundary_trusted_up_to must be >= -1.")

    def __len__(self) -> int:
        return len(self.alphas)

    def alpha(self, k: int) -> float:
        """``alpha_k`` with ``alpha_{-1} = -1`` and zero padding past the end."""
        if k == -1:
            return -1.0
        if 0 <= k < len(self.alphas):
            return self.alphas[k]
        return 0.0

    def rho(self, k: int) -> float:
        return float(np.sqrt(max(0.0, 1.0 - self.alpha(k) ** 2)))

    def trusted(self, k: int) -> bool:
        return self.boundary_trusted_up_to is None or k <= self.boundary_trusted_up_to


@dataclass(frozen=True, eq=False)
class CmvMatrix:
    """Orthogonal pentadiagonal matrix ``C_mn = <e_m, U e_n>``."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        c = np.asarray(self.entries, dtype=float)
        object.__setattr__(self, "entries", c)
        if c.ndim != 2 or c.shape[0] != c.shape[1] or c.shape[0] == 0:
            raise NotCmvShaped(f"CMV matrix must be square and nonempty, got shape {c.shape}.")
        n = c.shape[0]
        defect = float(np.max(np.abs(c.T @ c - np.eye(n))))
        if defect > STRUCTURE_TOL:
            raise NotCmvShaped(
                f"Matrix is not orthogonal (defect {defect!r}).",
                witness={"orthogonality": defect},
            )
        rows, cols = np.indices(c.shape)
        outside = np.abs(c[np.abs(rows - cols) > 2])
        if outside.size and float(outside.max()) > STRUCTURE_TOL:
            m, k = (int(x) for x in np.argwhere((np.abs(rows - cols) > 2) & (np.abs(c) > STRUCTURE_TOL))[0])
            raise NotCmvShaped(
                f"Entry ({m}, {k}) lies outside the pentadiagonal band.",
                witness={"row": m, "column": k, "value": float(c[m, k])},
            )

    @property
    def size(self) -> int:
        return int(self.entries.shape[0])


@dataclass(frozen=True)
class JacobiCoefficients:
    """Diagonal ``r_k`` and off-diagonal ``s_k`` of a Jacobi matrix."""

    r: tuple[float, ...]
    s: tuple[float, ...]

    def __post_init__(self) -> None:
        if not self.r:
            raise ValueError("A Jacobi matrix needs at least one diagonal entry.")
        if len(self.s) != len(self.r) - 1:
            raise ValueError(f"Expected {len(self.r) - 1} off-diagonal entries, got {len(self.s)}.")
        if any(value < 0.0 for value in self.s):
            raise ValueError("Off-diagonal entries must be nonnegative.")
        if any(abs(value) > 1.0 + BOUNDARY_TOL for value in self.r):
            raise ValueError("Diagonal entries must lie in [-1, 1].")

    @property
    def size(self) -> int:
        return len(self.r)

"""
Szegedy quantization of a stochastic matrix.

The walk acts on the arc basis of the chain. ``phi_i = sum_j sqrt(P_ij) |i, j>`` spans the
coin-invariant subspace, ``R = 2 Pi - I`` reflects about it, ``S`` swaps the registers and
one step is ``U = S R``. Nothing here materializes the full ``N^2`` product space: the
projection goes through the sparse arc/vertex incidence ``W`` with ``W[(i, j), i] = sqrt(P_ij)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy import sparse

from szl.errors import BasisMismatch, BasisTooLarge
from szl.markov.types import StochasticMatrix
from szl.szegedy.basis import ArcBasis, WalkerState

DEFAULT_OPERATOR_CAP = 4096


@dataclass(frozen=True, eq=False)
class SzegedyOperator:
    """
    Quantized walk of ``matrix`` on the reversal closure of its support arcs.

    Usage example
    -------------
        op = SzegedyOperator(homogeneous_walk(generate("hexahedron")))
        step = apply_U(op, phi_vector(op, "000"))
    """

    matrix: StochasticMatrix

    @cached_property
    def basis(self) -> ArcBasis:
        return ArcBasis.from_matrix(self.matrix)

    @cached_property
    def weights(self) -> np.ndarray:
        """``sqrt(P_ij)`` per basis arc; zero on reversal padding."""
        probs = self.matrix.probabilities
        values = np.asarray(probs[self.basis.sources, self.basis.targets]).ravel()
        return np.sqrt(values)

    @cached_property
    def incidence(self) -> sparse.csr_matrix:
        """Arc-by-vertex matrix whose columns are the ``phi_i``."""
        m, n = len(self.basis), self.matrix.size
        return sparse.csr_matrix((self.weights, (np.arange(m), self.basis.sources)), shape=(m, n))

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.matrix.vertices

    def check(self, s: WalkerState) -> None:
        if s.basis is not self.basis and s.basis != self.basis:
            raise BasisMismatch(
                "State is not on this operator's arc basis.",
                witness={"state_arcs": len(s.basis), "operator_arcs": len(self.basis)},
            )


def phi_vector(op: SzegedyOperator, i: str) -> WalkerState:
    """``phi_i``: amplitude ``sqrt(P_ij)`` on each arc ``(i, j)``."""
    column = op.incidence[:, op.matrix.position(i)]
    return WalkerState(op.basis, column.toarray().ravel())


def apply_swap(s: WalkerState) -> WalkerState:
    """Move the amplitude of ``(i, j)`` to ``(j, i)``."""
    return WalkerState(s.basis, s.amplitudes[s.basis.reverse], unnormalized=s.unnormalized)


def apply_projection(op: SzegedyOperator, s: WalkerState) -> WalkerState:
    """``Pi s = sum_i phi_i <phi_i, s>``."""
    op.check(s)
    w = op.incidence
    return WalkerState(op.basis, w @ (w.T @ s.amplitudes), unnormalized=True)


def apply_reflection(op: SzegedyOperator, s: WalkerState) -> WalkerState:
    """Coin flip ``(2 Pi - I) s``."""
    projected = apply_projection(op, s)
    return WalkerState(op.basis, 2.0 * projected.amplitudes - s.amplitudes, unnormalized=s.unnormalized)


def apply_U(op: SzegedyOperator, s: WalkerState) -> WalkerState:
    return apply_swap(apply_reflection(op, s))


def apply_U_inverse(op: SzegedyOperator, s: WalkerState) -> WalkerState:
    op.check(s)
    return apply_reflection(op, apply_swap(s))


def operator_sparse(op: SzegedyOperator) -> sparse.csr_matrix:
    """``U`` as a sparse matrix with ``U[a, b] = <arc_a, U arc_b>``."""
    w = op.incidence
    reflection = (2.0 * (w @ w.T) - sparse.identity(len(op.basis), format="csr")).tocsr()
    return reflection[op.basis.reverse, :].tocsr()


def operator_matrix(op: SzegedyOperator, cap: int = DEFAULT_OPERATOR_CAP) -> np.ndarray:
    """
    Dense ``U`` on the arc basis.

    Raises
    ------
    BasisTooLarge
        When the basis has more than ``cap`` arcs.
    """
    if len(op.basis) > cap:
        raise BasisTooLarge(
            f"Arc basis has {len(op.basis)} arcs; the dense cap is {cap}.",
            witness={"arcs": len(op.basis), "cap": cap},
        )
    return operator_sparse(op).toarray()

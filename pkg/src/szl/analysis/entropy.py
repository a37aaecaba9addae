"""Coin-reduced density matrices and von Neumann entropy."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy import sparse

from szl.errors import InvalidParams, NotDensity
from szl.szegedy.basis import WalkerState

DENSITY_TOL = 1e-10
EIGENVALUE_CUTOFF = 1e-14
SUPPORT_FLOOR = 1e-15


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """
    Real symmetric density matrix on a subset of position vertices.

    Parameters
    ----------
    vertices
        Labels of the rows, in vertex order.
    matrix
        Symmetric, trace one, positive semidefinite (all within ``1e-10``).
    """

    vertices: tuple[str, ...]
    matrix: np.ndarray

    def __post_init__(self) -> None:
        rho = np.asarray(self.matrix, dtype=float)
        object.__setattr__(self, "matrix", rho)
        n = len(self.vertices)
        if rho.shape != (n, n):
            raise NotDensity(
                f"Shape {rho.shape} does not match {n} vertices.",
                witness={"shape": list(rho.shape)},
            )
        asymmetry = float(np.max(np.abs(rho - rho.T))) if n else 0.0
        if asymmetry > DENSITY_TOL:
            raise NotDensity(
                f"Matrix is not symmetric (defect {asymmetry!r}).",
                witness={"asymmetry": asymmetry},
            )
        trace = float(np.trace(rho))
        if abs(trace - 1.0) > DENSITY_TOL:
            raise NotDensity(f"Trace is {trace!r}, not 1.", witness={"trace": trace})
        lowest = float(self.eigenvalues[0])
        if lowest < -DENSITY_TOL:
            raise NotDensity(f"Negative eigenvalue {lowest!r}.", witness={"eigenvalue": lowest})

    @cached_property
    def eigenvalues(self) -> np.ndarray:
        """Ascending eigenvalues."""
        return np.linalg.eigvalsh(self.matrix)


def reduce_density_coin(s: WalkerState) -> DensityMatrix:
    """
    Partial trace over the coin register.

    ``rho[i, i'] = sum_j amp(i, j) amp(i', j)``, restricted to positions that carry amplitude.

    Usage example
    -------------
        reduce_density_coin(basis.state("B", "C")).eigenvalues  # [1/6, 1/6, 2/3] on the cube
    """
    arcs = s.basis
    n = len(arcs.vertices)
    amplitudes = sparse.csr_matrix((s.amplitudes, (arcs.sources, arcs.targets)), shape=(n, n))
    amplitudes.eliminate_zeros()
    weight = np.asarray(amplitudes.multiply(amplitudes).sum(axis=1)).ravel()
    support = np.flatnonzero(weight > SUPPORT_FLOOR**2)
    rows = amplitudes[support]
    rho = (rows @ rows.T).toarray()
    return DensityMatrix(vertices=tuple(arcs.vertices[k] for k in support), matrix=rho)


def von_neumann_entropy(d: DensityMatrix, base: float = math.e) -> float:
    """
    ``-sum lambda log lambda`` over eigenvalues above ``1e-14``.

    The logarithm is natural by default; ``base=2`` gives the entropy in bits.
    """
    if not (base > 0.0 and base != 1.0):
        raise InvalidParams(
            f"Logarithm base must be positive and different from 1, got {base!r}.",
            witness={"base": base},
        )
    values = d.eigenvalues[d.eigenvalues > EIGENVALUE_CUTOFF]
    return float(-np.sum(values * np.log(values)) / math.log(base))


def entanglement_entropy(s: WalkerState, base: float = math.e) -> float:
    """Entropy of the coin-reduced density of ``s``."""
    return von_neumann_entropy(reduce_density_coin(s), base)


def hypercube_entropy_spectrum(n: int, k: int) -> list[tuple[float, int]]:
    """
    Spectrum of the reduced density of ``|k, k+1>`` on the ``n``-cube.

    Two weight-``k`` words share an upper neighbour exactly when they differ in two bits, so the
    density is ``((n-k) I + A) / (C(n,k) (n-k))`` with ``A`` the adjacency matrix of the Johnson
    graph ``J(n, k)``. Its eigenvalues ``(k-j)(n-k-j) - j`` have multiplicity
    ``C(n,j) - C(n,j-1)`` for ``j = 0 .. min(k, n-k)``.

    Returns ``(eigenvalue, multiplicity)`` pairs in ascending order. For ``k`` in ``{0, 1, n-1}``
    this is ``(n-k-1) / (C(n,k) (n-k))`` repeated ``C(n,k) - 1`` times plus one larger value.

    Usage example
    -------------
        hypercube_entropy_spectrum(4, 2)  # [(0.0, 2), (1/6, 3), (1/2, 1)]
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidParams(f"n must be an integer >= 1, got {n!r}.", witness={"n": n})
    if isinstance(k, bool) or not isinstance(k, int) or not 0 <= k < n:
        raise InvalidParams(f"k must be an integer in [0, {n - 1}], got {k!r}.", witness={"k": k})
    denominator = math.comb(n, k) * (n - k)
    spectrum = []
    for j in range(min(k, n - k), -1, -1):
        johnson = (k - j) * (n - k - j) - j
        multiplicity = math.comb(n, j) - (math.comb(n, j - 1) if j > 0 else 0)
        spectrum.append(((n - k + johnson) / denominator, multiplicity))
    return spectrum


def expand_spectrum(spectrum: list[tuple[float, int]]) -> np.ndarray:
    """Eigenvalues with multiplicity, ascending."""
    return np.sort(np.concatenate([np.full(m, value) for value, m in spectrum]))

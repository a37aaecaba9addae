"""Arc basis of the doubled state space and real walker states on it."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

import numpy as np

from szl.errors import ArcNotInBasis, BasisMismatch, DimensionMismatch, NotUnit, UnknownVertex
from szl.markov.types import StochasticMatrix

UNIT_TOL = 1e-10


@dataclass(frozen=True)
class ArcBasis:
    """
    Ordered basis ``|i> (x) |j>`` over vertex pairs, closed under reversal.

    Parameters
    ----------
    vertices
        Vertex labels of the underlying chain.
    arcs
        ``(source index, target index)`` pairs, sorted.
    """

    vertices: tuple[str, ...]
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if list(self.arcs) != sorted(set(self.arcs)):
            raise ValueError("Arc basis must be sorted and free of duplicates.")
        n = len(self.vertices)
        for i, j in self.arcs:
            if not (0 <= i < n and 0 <= j < n):
                raise UnknownVertex(
                    f"Arc index ({i}, {j}) outside {n} vertices.",
                    witness={"arc": [i, j]},
                )
        known = set(self.arcs)
        for i, j in self.arcs:
            if (j, i) not in known:
                raise ArcNotInBasis(
                    f"Reversal of ({self.vertices[i]}, {self.vertices[j]}) is missing.",
                    witness={"arc": [self.vertices[j], self.vertices[i]]},
                )

    @classmethod
    def from_matrix(cls, p: StochasticMatrix) -> "ArcBasis":
        """Support arcs of ``p`` plus their reversals."""
        coo = p.probabilities.tocoo()
        support = set(zip(coo.row.tolist(), coo.col.tolist()))
        closed = support | {(j, i) for i, j in support}
        return cls(vertices=p.vertices, arcs=tuple(sorted(closed)))

    def __len__(self) -> int:
        return len(self.arcs)

    @cached_property
    def sources(self) -> np.ndarray:
        return np.array([i for i, _ in self.arcs], dtype=np.intp)

    @cached_property
    def targets(self) -> np.ndarray:
        return np.array([j for _, j in self.arcs], dtype=np.intp)

    @cached_property
    def lookup(self) -> dict[tuple[str, str], int]:
        return {(self.vertices[i], self.vertices[j]): a for a, (i, j) in enumerate(self.arcs)}

    @cached_property
    def reverse(self) -> np.ndarray:
        """``reverse[a]`` is the position of the reversed arc of ``a``."""
        position = {arc: a for a, arc in enumerate(self.arcs)}
        return np.array([position[(j, i)] for i, j in self.arcs], dtype=np.intp)

    def position(self, i: str, j: str) -> int:
        try:
            return self.lookup[(i, j)]
        except KeyError as exc:
            raise ArcNotInBasis(f"Arc ({i}, {j}) is not in the basis.", witness={"arc": [i, j]}) from exc

    def labelled(self, a: int) -> tuple[str, str]:
        i, j = self.arcs[a]
        return self.vertices[i], self.vertices[j]


@dataclass(frozen=True, eq=False)
class WalkerState:
    """
    Real amplitudes over an :class:`ArcBasis`.

    Unit norm (within ``1e-10``) is enforced unless ``unnormalized`` marks an
    intermediate such as a projection or a difference of states.

    Usage example
    -------------
        s = WalkerState.basis_vector(basis, "a", "b")
        t = (s + WalkerState.basis_vector(basis, "b", "a")).normalized()
    """

    basis: ArcBasis
    amplitudes: np.ndarray
    unnormalized: bool = False

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes, dtype=float)
        object.__setattr__(self, "amplitudes", amps)
        if amps.shape != (len(self.basis),):
            raise DimensionMismatch(
                f"{amps.shape} amplitudes for a basis of {len(self.basis)} arcs.",
                witness={"shape": list(amps.shape), "basis": len(self.basis)},
            )
        if not self.unnormalized:
            norm = float(np.linalg.norm(amps))
            if abs(norm - 1.0) > UNIT_TOL:
                raise NotUnit(f"State norm is {norm!r}.", witness={"norm": norm})

    @classmethod
    def from_amplitudes(
        cls,
        basis: ArcBasis,
        entries: Mapping[tuple[str, str], float],
        *,
        unnormalized: bool = False,
    ) -> "WalkerState":
        amps = np.zeros(len(basis))
        for (i, j), value in entries.items():
            amps[basis.position(i, j)] += float(value)
        return cls(basis=basis, amplitudes=amps, unnormalized=unnormalized)

    @classmethod
    def basis_vector(cls, basis: ArcBasis, i: str, j: str) -> "WalkerState":
        return cls.from_amplitudes(basis, {(i, j): 1.0})

    def _check_same_basis(self, other: "WalkerState") -> None:
        if other.basis is not self.basis and other.basis != self.basis:
            raise BasisMismatch("States live on different arc bases.")

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def inner(self, other: "WalkerState") -> float:
        self._check_same_basis(other)
        return float(self.amplitudes @ other.amplitudes)

    def amplitude(self, i: str, j: str) -> float:
        return float(self.amplitudes[self.basis.position(i, j)])

    def items(self, tol: float = 0.0) -> list[tuple[str, str, float]]:
        """Nonzero amplitudes as ``(i, j, value)`` in arc order."""
        return [
            (*self.basis.labelled(a), float(value))
            for a, value in enumerate(self.amplitudes)
            if abs(value) > tol
        ]

    def normalized(self) -> "WalkerState":
        norm = self.norm()
        if norm == 0.0:
            raise NotUnit("Cannot normalize the zero state.", witness={"norm": 0.0})
        return WalkerState(self.basis, self.amplitudes / norm)

    def distance(self, other: "WalkerState") -> float:
        self._check_same_basis(other)
        return float(np.linalg.norm(self.amplitudes - other.amplitudes))

    def __add__(self, other: "WalkerState") -> "WalkerState":
        self._check_same_basis(other)
        return WalkerState(self.basis, self.amplitudes + other.amplitudes, unnormalized=True)

    def __sub__(self, other: "WalkerState") -> "WalkerState":
        self._check_same_basis(other)
        return WalkerState(self.basis, self.amplitudes - other.amplitudes, unnormalized=True)

    def __mul__(self, scalar: float) -> "WalkerState":
        return WalkerState(self.basis, self.amplitudes * float(scalar), unnormalized=True)

    __rmul__ = __mul__

    def __neg__(self) -> "WalkerState":
        return WalkerState(self.basis, -self.amplitudes, unnormalized=self.unnormalized)


def combine(basis: ArcBasis, terms: Iterable[tuple[float, WalkerState]]) -> WalkerState:
    """Linear combination ``sum c_k s_k`` as an unnormalized state."""
    total = np.zeros(len(basis))
    for coefficient, state in terms:
        if state.basis is not basis and state.basis != basis:
            raise BasisMismatch("States live on different arc bases.")
        total += coefficient * state.amplitudes
    return WalkerState(basis, total, unnormalized=True)

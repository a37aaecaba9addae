from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np
from scipy import sparse

from szl.errors import DimensionMismatch, InvalidChain, UnknownVertex

ROW_SUM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class StochasticMatrix:
    """
    Row-stochastic transition matrix over labelled vertices.

    Parameters
    ----------
    vertices
        Vertex labels; row/column ``k`` belongs to ``vertices[k]``.
    probabilities
        Square sparse matrix; normalized to CSR with sorted indices and no stored zeros.

    Usage example
    -------------
        p = StochasticMatrix.from_dense(("a", "b"), [[0.0, 1.0], [1.0, 0.0]])
        p.entry("a", "b")  # 1.0
    """

    vertices: tuple[str, ...]
    probabilities: sparse.csr_matrix

    def __post_init__(self) -> None:
        csr = sparse.csr_matrix(self.probabilities, dtype=float)
        csr.eliminate_zeros()
        csr.sort_indices()
        object.__setattr__(self, "probabilities", csr)

        n = len(self.vertices)
        if csr.shape != (n, n):
            raise DimensionMismatch(
                f"Matrix shape {csr.shape} does not match {n} vertices.",
                witness={"shape": list(csr.shape), "vertices": n},
            )
        if len(set(self.vertices)) != n:
            raise InvalidChain("Vertex labels must be unique.")
        if csr.nnz and csr.data.min() < 0.0:
            raise InvalidChain(
                "Transition probabilities must be nonnegative.",
                witness={"min": float(csr.data.min())},
            )
        sums = np.asarray(csr.sum(axis=1)).ravel()
        bad = np.flatnonzero(np.abs(sums - 1.0) > ROW_SUM_TOL)
        if bad.size:
            k = int(bad[0])
            raise InvalidChain(
                f"Row {self.vertices[k]!r} sums to {sums[k]!r}, not 1.",
                witness={"vertex": self.vertices[k], "row_sum": float(sums[k])},
            )

    @classmethod
    def from_dense(cls, vertices: Iterable[str], rows: Sequence[Sequence[float]] | np.ndarray) -> "StochasticMatrix":
        return cls(vertices=tuple(vertices), probabilities=sparse.csr_matrix(np.asarray(rows, dtype=float)))

    @classmethod
    def from_entries(cls, vertices: Iterable[str], entries: Mapping[tuple[str, str], float]) -> "StochasticMatrix":
        """Build from a ``{(i, j): P_ij}`` mapping; absent pairs are zero."""
        ordered = tuple(vertices)
        index = {v: k for k, v in enumerate(ordered)}
        rows, cols, data = [], [], []
        for (i, j), value in entries.items():
            if i not in index or j not in index:
                raise UnknownVertex(
                    f"Entry ({i}, {j}) uses an unknown vertex.",
                    witness={"arc": [i, j]},
                )
            rows.append(index[i])
            cols.append(index[j])
            data.append(float(value))
        matrix = sparse.csr_matrix((data, (rows, cols)), shape=(len(ordered), len(ordered)))
        return cls(vertices=ordered, probabilities=matrix)

    @property
    def size(self) -> int:
        return len(self.vertices)

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: k for k, v in enumerate(self.vertices)}

    def position(self, vertex: str) -> int:
        try:
            return self.index[vertex]
        except KeyError as exc:
            raise UnknownVertex(f"Unknown vertex {vertex!r}.", witness={"vertex": vertex}) from exc

    def dense(self) -> np.ndarray:
        return self.probabilities.toarray()

    def entry(self, i: str, j: str) -> float:
        return float(self.probabilities[self.position(i), self.position(j)])

    def row(self, k: int) -> tuple[np.ndarray, np.ndarray]:
        """Column indices and values of the positive entries of row ``k``."""
        start, stop = self.probabilities.indptr[k], self.probabilities.indptr[k + 1]
        return self.probabilities.indices[start:stop], self.probabilities.data[start:stop]

    @cached_property
    def successors(self) -> tuple[dict[int, float], ...]:
        """Per row, ``{column: probability}`` of the positive entries."""
        return tuple(
            {int(j): float(value) for j, value in zip(*self.row(k))} for k in range(self.size)
        )


@dataclass(frozen=True, eq=False)
class Distribution:
    """Probability vector over labelled vertices."""

    vertices: tuple[str, ...]
    probabilities: np.ndarray

    def __post_init__(self) -> None:
        probs = np.asarray(self.probabilities, dtype=float)
        object.__setattr__(self, "probabilities", probs)
        if probs.shape != (len(self.vertices),):
            raise DimensionMismatch(
                f"{probs.shape} probabilities for {len(self.vertices)} vertices.",
                witness={"shape": list(probs.shape), "vertices": len(self.vertices)},
            )
        if probs.size and probs.min() < -ROW_SUM_TOL:
            raise InvalidChain(
                "Probabilities must be nonnegative.",
                witness={"min": float(probs.min())},
            )
        if abs(float(probs.sum()) - 1.0) > ROW_SUM_TOL:
            raise InvalidChain(
                f"Distribution sums to {probs.sum()!r}, not 1.",
                witness={"sum": float(probs.sum())},
            )

    @classmethod
    def delta(cls, vertices: Iterable[str], at: str) -> "Distribution":
        ordered = tuple(vertices)
        if at not in ordered:
            raise UnknownVertex(f"Unknown vertex {at!r}.", witness={"vertex": at})
        probs = np.zeros(len(ordered))
        probs[ordered.index(at)] = 1.0
        return cls(vertices=ordered, probabilities=probs)

    def get(self, vertex: str) -> float:
        try:
            return float(self.probabilities[self.vertices.index(vertex)])
        except ValueError as exc:
            raise UnknownVertex(f"Unknown vertex {vertex!r}.", witness={"vertex": vertex}) from exc

    def as_dict(self) -> dict[str, float]:
        return {v: float(p) for v, p in zip(self.vertices, self.probabilities)}


@dataclass(frozen=True)
class BirthDeathChain:
    """
    Nearest-neighbour chain on states ``0 .. n-1``.

    Parameters
    ----------
    p
        Up probabilities; ``p[n-1] = 0``.
    q
        Down probabilities; ``q[0] = 0``.
    r
        Holding probabilities.
    """

    p: tuple[float, ...]
    q: tuple[float, ...]
    r: tuple[float, ...]

    def __post_init__(self) -> None:
        n = len(self.p)
        if n == 0 or len(self.q) != n or len(self.r) != n:
            raise InvalidChain(
                "p, q and r must be nonempty and of equal length.",
                witness={"lengths": [len(self.p), len(self.q), len(self.r)]},
            )
        if abs(self.q[0]) > ROW_SUM_TOL:
            raise InvalidChain(
                f"q[0] must be 0, got {self.q[0]!r}.",
                witness={"state": 0, "q": self.q[0]},
            )
        if abs(self.p[-1]) > ROW_SUM_TOL:
            raise InvalidChain(
                f"p[{n - 1}] must be 0, got {self.p[-1]!r}.",
                witness={"state": n - 1, "p": self.p[-1]},
            )
        for k, (up, down, stay) in enumerate(zip(self.p, self.q, self.r)):
            if min(up, down, stay) < -ROW_SUM_TOL or max(up, down, stay) > 1.0 + ROW_SUM_TOL:
                raise InvalidChain(
                    f"State {k} has a probability outside [0, 1].",
                    witness={"state": k},
                )
            if abs(up + down + stay - 1.0) > ROW_SUM_TOL:
                raise InvalidChain(
                    f"State {k}: p + q + r = {up + down + stay!r}.",
                    witness={"state": k, "sum": up + down + stay},
                )

    @property
    def size(self) -> int:
        return len(self.p)

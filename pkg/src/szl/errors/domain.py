"""Domain errors raised by the numerical modules.

Every error carries a JSON-serializable ``witness`` so the CLI can report the exact
vertex, block, arc or index that broke the contract.
"""

from __future__ import annotations

from typing import Any, Mapping, Optional


class SzlError(ValueError):
    """Base class of all domain errors; ``witness`` names what violated the contract."""

    def __init__(self, message: str, *, witness: Optional[Mapping[str, Any]] = None) -> None:
        super().__init__(message)
        self.witness: dict[str, Any] = dict(witness or {})

    def to_payload(self) -> dict[str, Any]:
        return {"error": type(self).__name__, "message": str(self), "witness": self.witness}


# ##########  graphs  ##########


class InvalidPartition(SzlError):
    """Blocks overlap, are empty, or do not cover the vertex set."""


class DisconnectedGraph(SzlError):
    """Some vertex is unreachable from the root."""


class NotEquitable(SzlError):
    """Two vertices of one block have different neighbour counts in some block."""


class InvalidParams(SzlError):
    """Unknown graph family or out-of-range generator parameters."""


# ##########  markov  ##########


class SinkVertex(SzlError):
    """A vertex without outgoing arcs cannot carry a homogeneous walk."""


class NotLumpable(SzlError):
    """Block row sums differ inside a block."""


class InvalidChain(SzlError):
    """Birth-death probabilities violate their invariants."""


class DimensionMismatch(SzlError):
    """A distribution or matrix is indexed by a different vertex set."""


# ##########  szegedy  ##########


class UnknownVertex(SzlError):
    pass


class ArcNotInBasis(SzlError):
    pass


class BasisTooLarge(SzlError):
    pass


class BasisMismatch(SzlError):
    """States, operators or aggregated bases built over incompatible arc bases."""


class NormDrift(SzlError):
    """Evolution lost unitarity beyond tolerance."""


# ##########  aggregation  ##########


class InconsistentConstraints(SzlError):
    """A closing edge of the linking constraint graph disagrees with the propagated values."""


class NormalizationImpossible(SzlError):
    pass


# ##########  cmv  ##########


class NotUnit(SzlError):
    pass


class NotCoinInvariant(SzlError):
    pass


class InvalidSequence(SzlError):
    pass


class NotCmvShaped(SzlError):
    pass


class NotStochastic(SzlError):
    pass


class DegenerateChain(SzlError):
    pass


class InconsistentR(SzlError):
    pass


class NegativeRadicand(SzlError):
    pass


# ##########  analysis  ##########


class NotDensity(SzlError):
    pass

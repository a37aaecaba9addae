"""Szegedy quantization: arc basis, coin reflection, swap and the walk step."""

from .basis import ArcBasis, WalkerState, combine
from .operator import (
    DEFAULT_OPERATOR_CAP,
    SzegedyOperator,
    apply_projection,
    apply_reflection,
    apply_swap,
    apply_U,
    apply_U_inverse,
    operator_matrix,
    operator_sparse,
    phi_vector,
)

__all__ = [
    "DEFAULT_OPERATOR_CAP",
    "ArcBasis",
    "SzegedyOperator",
    "WalkerState",
    "apply_U",
    "apply_U_inverse",
    "apply_projection",
    "apply_reflection",
    "apply_swap",
    "combine",
    "operator_matrix",
    "operator_sparse",
    "phi_vector",
]

"""CMV uniformization, Verblunsky coefficients and the Geronimus relations."""

from .geronimus import geronimus_pqr, jacobi_from_verblunsky, jacobi_matrix, verblunsky_from_pqr
from .matrix import build_cmv_matrix, lm_factors, restricted_symmetric_part, verblunsky_from_cmv_matrix
from .types import CmvMatrix, JacobiCoefficients, VerblunskySequence
from .uniformize import DEFAULT_DEP_TOL, cmv_orthonormalize, verblunsky_via_recurrence

__all__ = [
    "DEFAULT_DEP_TOL",
    "CmvMatrix",
    "JacobiCoefficients",
    "VerblunskySequence",
    "build_cmv_matrix",
    "cmv_orthonormalize",
    "geronimus_pqr",
    "jacobi_from_verblunsky",
    "jacobi_matrix",
    "lm_factors",
    "restricted_symmetric_part",
    "verblunsky_from_cmv_matrix",
    "verblunsky_from_pqr",
    "verblunsky_via_recurrence",
]

"""Aggregation of Szegedy walks along lumpable partitions."""

from .basis import AggregatedBasis, aggregated_basis, aggregated_phi, verify_reduction
from .conditions import DEFAULT_CONSISTENCY_TOL, ConditionResult, ConsistencyReport, check_conditions
from .linking import DEFAULT_LINKING_TOL, LinkingCoefficients, solve_linking

__all__ = [
    "DEFAULT_CONSISTENCY_TOL",
    "DEFAULT_LINKING_TOL",
    "AggregatedBasis",
    "ConditionResult",
    "ConsistencyReport",
    "LinkingCoefficients",
    "aggregated_basis",
    "aggregated_phi",
    "check_conditions",
    "solve_linking",
    "verify_reduction",
]

"""
errors subpackage: domain errors, configuration, logging and case reporting.

Key primitives
--------------
- SzlError and its subclasses: domain errors carrying a witness payload
- ErrorHandlingConfig / ToleranceConfig: run mode, log paths and numerical tolerances
- configure_logging(): rich console logging, optional file + JSONL event logs
- ErrorReporter: records case outcomes with residuals and renders the summary
- step(): context manager wrapping one named case
- Pipeline: dependency-aware case runner used by ``szl verify``
"""

from .config import ConfigError, ErrorHandlingConfig, ToleranceConfig
from .domain import (
    ArcNotInBasis,
    BasisMismatch,
    BasisTooLarge,
    DegenerateChain,
    DimensionMismatch,
    DisconnectedGraph,
    InconsistentConstraints,
    InconsistentR,
    InvalidChain,
    InvalidParams,
    InvalidPartition,
    InvalidSequence,
    NegativeRadicand,
    NormalizationImpossible,
    NormDrift,
    NotCmvShaped,
    NotCoinInvariant,
    NotDensity,
    NotEquitable,
    NotLumpable,
    NotStochastic,
    NotUnit,
    SinkVertex,
    SzlError,
    UnknownVertex,
)
from .logging import JsonlEventLogger, configure_logging
from .reporter import ErrorReporter
from .guards import step
from .pipeline import Pipeline, PipelineError

__all__ = [
    "ArcNotInBasis",
    "BasisMismatch",
    "BasisTooLarge",
    "ConfigError",
    "DegenerateChain",
    "DimensionMismatch",
    "DisconnectedGraph",
    "ErrorHandlingConfig",
    "ErrorReporter",
    "InconsistentConstraints",
    "InconsistentR",
    "InvalidChain",
    "InvalidParams",
    "InvalidPartition",
    "InvalidSequence",
    "JsonlEventLogger",
    "NegativeRadicand",
    "NormDrift",
    "NormalizationImpossible",
    "NotCmvShaped",
    "NotCoinInvariant",
    "NotDensity",
    "NotEquitable",
    "NotLumpable",
    "NotStochastic",
    "NotUnit",
    "Pipeline",
    "PipelineError",
    "SinkVertex",
    "SzlError",
    "ToleranceConfig",
    "UnknownVertex",
    "configure_logging",
    "step",
]

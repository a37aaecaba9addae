from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass
from typing import Any, Iterator, Mapping, Optional

from .reporter import ErrorReporter


@dataclass
class CaseOutcome:
    """Mutable slot the guarded block fills with its measured residual."""

    residual: Optional[float] = None


@contextmanager
def step(
    case_name: str,
    reporter: ErrorReporter,
    *,
    context: Optional[Mapping[str, Any]] = None,
) -> Iterator[CaseOutcome]:
    """
    Context manager wrapping one named case.

    Behavior
    --------
    - debug mode: the exception is recorded, then re-raised.
    - run mode: the exception is recorded and suppressed.

    Examples
    --------
    >>> with step("hexahedron.lump", reporter) as outcome:
    ...     outcome.residual = lump_residual()
    """
    outcome = CaseOutcome()
    try:
        yield outcome
    except Exception as exc:
        reporter.mark_failed(case_name=case_name, exc=exc, context=context)
        if reporter.cfg.mode == "debug":
            raise
    else:
        reporter.mark_ok(case_name, residual=outcome.residual, context=context)

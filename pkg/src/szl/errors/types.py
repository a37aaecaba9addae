from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Mapping, Optional
import traceback as _traceback


class CaseStatus(str, Enum):
    """Outcome of a named case in a run."""

    OK = "ok"
    FAILED = "failed"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class CaseRecord:
    """
    Structured record of one case outcome.

    ``residual`` is the largest deviation from the expected value that the case
    measured; it is None when the case never produced one (failure or skip).

    Usage example
    -------------
        rec = CaseRecord(case_name="tetrahedron.lump", status=CaseStatus.OK, message="", residual=0.0)
    """

    case_name: str
    status: CaseStatus
    message: str
    residual: Optional[float] = None
    exc_type: Optional[str] = None
    traceback: Optional[str] = None
    context: Optional[Mapping[str, Any]] = None
    caused_by: Optional[str] = None

    @staticmethod
    def from_exception(*, case_name: str, exc: BaseException, context: Optional[Mapping[str, Any]]) -> "CaseRecord":
        tb = "".join(_traceback.format_exception(type(exc), exc, exc.__traceback__))
        return CaseRecord(
            case_name=case_name,
            status=CaseStatus.FAILED,
            message=str(exc),
            exc_type=type(exc).__name__,
            traceback=tb,
            context=context,
        )

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import Any, Mapping, Optional

from rich.console import Console
from rich.table import Table

from .config import ErrorHandlingConfig
from .logging import JsonlEventLogger
from .types import CaseRecord, CaseStatus


@dataclass
class ErrorReporter:
    """
    Collects case outcomes (OK / FAILED / SKIPPED) with their residuals and renders
    the end-of-run summary.

    The reporter is the single source of truth for what happened in a run; the
    pipeline and the ``step`` guard report here and never format anything.

    Usage example
    -------------
        reporter = ErrorReporter(cfg=cfg, logger=logger, event_logger=event_logger)
        reporter.mark_ok("hexahedron.lump", residual=0.0)
        reporter.mark_failed(case_name="octahedron.cmv", exc=exc)
        reporter.print_summary()
    """

    cfg: ErrorHandlingConfig
    logger: logging.Logger
    event_logger: Optional[JsonlEventLogger] = None

    def __post_init__(self) -> None:
        self._run_id = self.cfg.resolved_run_id()
        self._records: dict[str, CaseRecord] = {}

    @property
    def run_id(self) -> str:
        return self._run_id

    def status(self, case_name: str) -> Optional[CaseStatus]:
        """Return the recorded status of a case, if any."""
        record = self._records.get(case_name)
        return record.status if record is not None else None

    def ok(self, case_name: str) -> bool:
        return self.status(case_name) == CaseStatus.OK

    def failed(self, case_name: str) -> bool:
        return self.status(case_name) == CaseStatus.FAILED

    def skipped(self, case_name: str) -> bool:
        return self.status(case_name) == CaseStatus.SKIPPED

    def records(self) -> list[CaseRecord]:
        """Return all records in case-name order."""
        return [self._records[name] for name in sorted(self._records)]

    def failures_count(self) -> int:
        return sum(1 for rec in self._records.values() if rec.status == CaseStatus.FAILED)

    def has_failures(self) -> bool:
        return self.failures_count() > 0

    def mark_ok(
        self,
        case_name: str,
        *,
        residual: Optional[float] = None,
        context: Optional[Mapping[str, Any]] = None,
    ) -> None:
        """Record a passing case and its measured residual."""
        self._records[case_name] = CaseRecord(
            case_name=case_name,
            status=CaseStatus.OK,
            message="",
            residual=residual,
            context=context,
        )
        self.logger.debug("Case '%s' ok (residual=%s)", case_name, residual, extra={"case": case_name})
        if self.event_logger is not None:
            self.event_logger.write(event="case_ok", case=case_name, level="INFO", residual=residual)

    def mark_skipped(self, *, case_name: str, caused_by: str, context: Optional[Mapping[str, Any]] = None) -> None:
        """Record a case skipped because of ``caused_by``."""
        rec = CaseRecord(
            case_name=case_name,
            status=CaseStatus.SKIPPED,
            message=f"Skipped because dependency '{caused_by}' failed or was skipped.",
            context=context,
            caused_by=caused_by,
        )
        self._records[case_name] = rec
        self.logger.warning("Skipping case '%s' (caused_by=%s)", case_name, caused_by, extra={"case": case_name})
        if self.event_logger is not None:
            self.event_logger.write(
                event="case_skipped", case=case_name, level="WARNING", context=context, message=rec.message
            )

    def mark_failed(self, *, case_name: str, exc: BaseException, context: Optional[Mapping[str, Any]] = None) -> None:
        """Record a failing case; a ``residual`` in the exception witness is kept."""
        rec = CaseRecord.from_exception(case_name=case_name, exc=exc, context=context)
        witness = getattr(exc, "witness", None)
        if isinstance(witness, Mapping) and isinstance(witness.get("residual"), (int, float)):
            rec = replace(rec, residual=float(witness["residual"]))
        self._records[case_name] = rec

        self.logger.error(
            "Case '%s' failed: %s (%s)", case_name, str(exc), type(exc).__name__, extra={"case": case_name}
        )
        self.logger.debug("Traceback for case '%s':\n%s", case_name, rec.traceback, extra={"case": case_name})
        if self.event_logger is not None:
            self.event_logger.write(
                event="case_failed", case=case_name, level="ERROR", context=context, exc=exc, residual=rec.residual
            )

    def render_summary(self) -> str:
        """Render a plain-text summary with failure details and log artifact paths."""
        counts = {status: 0 for status in CaseStatus}
        for rec in self._records.values():
            counts[rec.status] += 1

        lines = [
            f"Run summary (run_id={self._run_id}, mode={self.cfg.mode})",
            f"  OK:   {counts[CaseStatus.OK]}",
            f"  FAIL: {counts[CaseStatus.FAILED]}",
            f"  SKIP: {counts[CaseStatus.SKIPPED]}",
        ]
        problems = [rec for rec in self.records() if rec.status != CaseStatus.OK]
        if not problems:
            return "\n".join(lines)

        lines += ["", "Details:"]
        for rec in problems:
            if rec.status == CaseStatus.FAILED:
                lines.append(f"  - FAIL {rec.case_name}: {rec.exc_type}: {rec.message}")
            else:
                lines.append(f"  - SKIP {rec.case_name}: {rec.message}")

        if self.cfg.log_dir is not None:
            lines += ["", "Artifacts:", f"  - {self.cfg.log_dir / f'run_{self._run_id}.log'}"]
            if self.cfg.write_jsonl:
                lines.append(f"  - {self.cfg.log_dir / f'events_{self._run_id}.jsonl'}")
        return "\n".join(lines)

    def summary_table(self) -> Table:
        """Build a rich table with one row per case."""
        table = Table(title=f"szl verify ({self._run_id})")
        table.add_column("case")
        table.add_column("status")
        table.add_column("residual", justify="right")
        styles = {CaseStatus.OK: "green", CaseStatus.FAILED: "red", CaseStatus.SKIPPED: "yellow"}
        for rec in self.records():
            residual = "-" if rec.residual is None else f"{rec.residual:.3e}"
            table.add_row(rec.case_name, f"[{styles[rec.status]}]{rec.status.value}[/]", residual)
        return table

    def print_summary(self, console: Optional[Console] = None) -> None:
        """Print the per-case table and the text summary on stderr."""
        out = console if console is not None else Console(stderr=True)
        out.print(self.summary_table())
        out.print(self.render_summary())

    def exit_code(self) -> int:
        """Return 0 if every case passed, else 1."""
        return 0 if not self.has_failures() else 1

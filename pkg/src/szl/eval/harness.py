from __future__ import annotations

from typing import Any, Callable, Optional, Sequence

from szl.errors import ErrorReporter, Pipeline
from szl.eval.suite import GoldenCase, GoldenMismatch

REPORT_FIELDS: tuple[str, ...] = ("case", "section", "status", "residual", "tolerance")


def _guarded(case: GoldenCase) -> Callable[[], float]:
    def run() -> float:
        residual = float(case.check())
        if not residual <= case.tolerance:
            raise GoldenMismatch(
                f"Case '{case.name}' deviates by {residual!r} (tolerance {case.tolerance!r}).",
                witness={"residual": residual, "tolerance": case.tolerance},
            )
        return residual

    return run


def run_suite(cases: Sequence[GoldenCase], reporter: ErrorReporter) -> list[dict[str, Any]]:
    """
    Run golden cases through a :class:`Pipeline` and return one report row per case.

    Rows carry ``case``, ``section``, ``status``, ``residual`` and ``tolerance``; failed
    rows add ``error`` and ``message``.

    Usage example
    -------------
        rows = run_suite(load_suite("golden", ToleranceConfig()), reporter)
    """
    pipeline = Pipeline(reporter)
    for case in cases:
        pipeline.add(case.name, _guarded(case), deps=case.deps, context={"section": case.section})
    pipeline.run()

    by_name = {case.name: case for case in cases}
    rows: list[dict[str, Any]] = []
    for rec in reporter.records():
        case: Optional[GoldenCase] = by_name.get(rec.case_name)
        if case is None:
            continue
        row: dict[str, Any] = {
            "case": case.name,
            "section": case.section,
            "status": rec.status.value,
            "residual": rec.residual,
            "tolerance": case.tolerance,
        }
        if rec.exc_type is not None:
            row["error"] = rec.exc_type
            row["message"] = rec.message
        rows.append(row)
    return rows

from pathlib import Path
import logging

import pytest

from szl.errors import ErrorHandlingConfig, ErrorReporter, Pipeline, PipelineError, configure_logging
from szl.errors.types import CaseStatus


def _make_reporter(*, tmp_path: Path, mode: str, max_failures: int | None = None) -> ErrorReporter:
    cfg = ErrorHandlingConfig(
        mode=mode,  # type: ignore[arg-type]
        log_dir=tmp_path / "logs",
        run_id="testrun",
        write_jsonl=False,
        max_failures=max_failures,
        console_level=logging.CRITICAL,
    )
    logger, event_logger = configure_logging(cfg=cfg)
    return ErrorReporter(cfg=cfg, logger=logger, event_logger=event_logger)


def test_pipeline_happy_path_returns_residuals(tmp_path: Path) -> None:
    reporter = _make_reporter(tmp_path=tmp_path, mode="run")
    pipe = Pipeline(reporter)

    pipe.add("lump", lambda: 0.0)
    pipe.add("linking", lambda: 1e-16, deps=["lump"])
    pipe.add("cmv", lambda: None, deps=["linking"])

    residuals = pipe.run()

    assert residuals == {"lump": 0.0, "linking": 1e-16, "cmv": None}
    assert all(reporter.ok(name) for name in residuals)
    assert [rec.residual for rec in reporter.records()] == [None, 1e-16, 0.0]


def test_pipeline_failure_skips_dependents_but_runs_independent(tmp_path: Path) -> None:
    reporter = _make_reporter(tmp_path=tmp_path, mode="run")
    pipe = Pipeline(reporter)
    ran: list[str] = []

    def a_fail() -> float:
        ran.append("A")
        raise ValueError("nope")

    def b_should_skip() -> float:
        ran.append("B")
        return 0.0

    def c_independent_ok() -> float:
        ran.append("C")
        return 0.0

    pipe.add("A", a_fail)
    pipe.add("B", b_should_skip, deps=["A"])
    pipe.add("C", c_independent_ok)

    residuals = pipe.run()

    assert residuals == {"C": 0.0}
    assert reporter.status("A") == CaseStatus.FAILED
    assert reporter.status("B") == CaseStatus.SKIPPED
    assert reporter.status("C") == CaseStatus.OK
    assert ran == ["A", "C"]


def test_pipeline_debug_mode_raises_on_failure(tmp_path: Path) -> None:
    reporter = _make_reporter(tmp_path=tmp_path, mode="debug")
    pipe = Pipeline(reporter)

    def boom() -> None:
        raise RuntimeError("stop")

    pipe.add("A", boom)

    with pytest.raises(RuntimeError, match="stop"):
        pipe.run()
    assert reporter.status("A") == CaseStatus.FAILED


def test_pipeline_cycle_detection_raises(tmp_path: Path) -> None:
    pipe = Pipeline(_make_reporter(tmp_path=tmp_path, mode="run"))
    pipe.add("A", lambda: 0.0, deps=["B"])
    pipe.add("B", lambda: 0.0, deps=["A"])

    with pytest.raises(PipelineError, match="could not make progress"):
        pipe.run()


def test_pipeline_undefined_dependency_raises(tmp_path: Path) -> None:
    pipe = Pipeline(_make_reporter(tmp_path=tmp_path, mode="run"))
    pipe.add("A", lambda: 0.0, deps=["B"])

    with pytest.raises(PipelineError, match="could not make progress"):
        pipe.run()


def test_pipeline_max_failures_stops_scheduling(tmp_path: Path) -> None:
    reporter = _make_reporter(tmp_path=tmp_path, mode="run", max_failures=1)
    pipe = Pipeline(reporter)

    def a_fail() -> None:
        raise ValueError("first")

    pipe.add("A_fail", a_fail)
    pipe.add("B_ok", lambda: 0.0)
    pipe.add("C_ok", lambda: 0.0)

    assert pipe.run() == {}
    assert reporter.status("B_ok") == CaseStatus.SKIPPED
    assert reporter.status("C_ok") == CaseStatus.SKIPPED
    assert reporter.failures_count() == 1


def test_pipeline_rejects_duplicate_case_names(tmp_path: Path) -> None:
    pipe = Pipeline(_make_reporter(tmp_path=tmp_path, mode="run"))
    pipe.add("A", lambda: 0.0)
    with pytest.raises(ValueError, match="Duplicate case name"):
        pipe.add("A", lambda: 0.0)

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Mapping, Optional

from rich.console import Console
from rich.logging import RichHandler

from .config import ErrorHandlingConfig

LOGGER_NAME = "szl"


def _utc_now_iso() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass
class JsonlEventLogger:
    """
    Appends structured run events as JSON lines.

    Every line holds ``time_utc``, ``run_id``, ``event``, ``case`` and ``level``, plus
    ``context``, ``residual``, ``exc_type`` and ``exc_msg`` when given.

    Usage example
    -------------
        ev = JsonlEventLogger(path=Path("logs/events_abc.jsonl"), run_id="abc")
        ev.write(event="case_ok", case="hexahedron.verblunsky", level="INFO", residual=3e-16)
    """

    path: Path
    run_id: str

    def write(
        self,
        *,
        event: str,
        case: Optional[str],
        level: str,
        context: Optional[Mapping[str, Any]] = None,
        exc: Optional[BaseException] = None,
        residual: Optional[float] = None,
        message: Optional[str] = None,
    ) -> None:
        payload: dict[str, Any] = {
            "time_utc": _utc_now_iso(),
            "run_id": self.run_id,
            "event": event,
            "case": case,
            "level": level,
        }
        if message:
            payload["message"] = message
        if context:
            payload["context"] = dict(context)
        if residual is not None:
            payload["residual"] = float(residual)
        if exc is not None:
            payload["exc_type"] = type(exc).__name__
            payload["exc_msg"] = str(exc)

        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as handle:
            handle.write(json.dumps(payload, ensure_ascii=False, sort_keys=True) + "\n")


class _RunContextFilter(logging.Filter):
    def __init__(self, *, run_id: str) -> None:
        super().__init__()
        self._run_id = run_id

    def filter(self, record: logging.LogRecord) -> bool:  # noqa: A003
        if not hasattr(record, "run_id"):
            setattr(record, "run_id", self._run_id)
        if not hasattr(record, "case"):
            setattr(record, "case", "-")
        return True


def configure_logging(*, cfg: ErrorHandlingConfig) -> tuple[logging.Logger, Optional[JsonlEventLogger]]:
    """
    Configure the ``szl`` logger: rich console output, plus file and JSONL logs when
    ``cfg.log_dir`` is set.

    Returns
    -------
    logger
        The configured ``szl`` logger. Library loggers (``szl.aggregation.linking``, ...)
        propagate into it.
    event_logger
        A JsonlEventLogger if ``cfg.write_jsonl`` and ``cfg.log_dir`` are set, else None.

    Usage example
    -------------
        logger, event_logger = configure_logging(cfg=ErrorHandlingConfig(log_dir=Path("logs")))
        logger.info("verify started")
    """
    run_id = cfg.resolved_run_id()

    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(logging.DEBUG)
    for handler in list(logger.handlers):
        handler.close()
    logger.handlers.clear()
    logger.filters.clear()
    logger.propagate = False

    context_filter = _RunContextFilter(run_id=run_id)

    console_handler = RichHandler(
        console=Console(stderr=True), rich_tracebacks=(cfg.mode == "debug"), show_path=False
    )
    console_handler.setLevel(cfg.console_level)
    console_handler.setFormatter(logging.Formatter("%(message)s"))
    console_handler.addFilter(context_filter)
    logger.addHandler(console_handler)

    event_logger = None
    if cfg.log_dir is not None:
        cfg.log_dir.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(cfg.log_dir / f"run_{run_id}.log", encoding="utf-8")
        file_handler.setLevel(cfg.file_level)
        file_handler.setFormatter(
            logging.Formatter(
                fmt="%(asctime)sZ | run=%(run_id)s | case=%(case)s | %(levelname)s | %(name)s | %(message)s",
                datefmt="%Y-%m-%dT%H:%M:%S",
            )
        )
        file_handler.addFilter(context_filter)
        logger.addHandler(file_handler)

        if cfg.write_jsonl:
            event_logger = JsonlEventLogger(path=cfg.log_dir / f"events_{run_id}.jsonl", run_id=run_id)

    logger.debug("Logging configured (run_id=%s, mode=%s, log_dir=%s)", run_id, cfg.mode, cfg.log_dir)
    return logger, event_logger

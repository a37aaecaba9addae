from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Literal, Mapping, Optional
import os
import uuid


class ConfigError(ValueError):
    """Raised when runtime configuration or CLI usage is missing or invalid."""


DEFAULT_SEED = 42


def _parse_minimal_yaml(text: str) -> dict[str, Any]:
    """Parse the flat ``section: / key: value`` subset of YAML used by szl config files."""

    data: dict[str, Any] = {}
    section_name: str | None = None
    for raw_line in text.splitlines():
        line = raw_line.split("#", 1)[0].rstrip()
        if not line.strip() or ":" not in line:
            continue

        key, value = [part.strip() for part in line.split(":", 1)]
        value = value.strip("\"'")
        if not line.startswith(" "):
            if value:
                data[key] = value
                section_name = None
            else:
                data[key] = {}
                section_name = key
            continue

        if section_name is not None:
            data[section_name][key] = value
    return data


def load_config(root: Path) -> dict[str, Any]:
    """
    Load szl config from a directory if present.

    Search order:
    1) ``szl.yaml``
    2) ``config.yaml``
    """

    for filename in ("szl.yaml", "config.yaml"):
        config_path = root / filename
        if config_path.exists():
            return _parse_minimal_yaml(config_path.read_text())
    return {}


def resolve_seed(*, env_var: str = "SZL_SEED") -> int:
    """Return the seed for randomized checks (``SZL_SEED``, default 42)."""

    raw = os.getenv(env_var, "").strip()
    if not raw:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigError(f"{env_var} must be an integer, got {raw!r}.") from exc


@dataclass(frozen=True)
class ToleranceConfig:
    """
    Numerical tolerances shared by every verb.

    Parameters
    ----------
    lumpability
        Absolute tolerance of the block row-sum comparison in ``lump``.
    consistency
        Relative tolerance for the consistency conditions and the closing-edge checks
        of the linking solver.
    dependence
        Residual norm below which a Krylov candidate counts as linearly dependent.
    operator_cap
        Largest arc basis for which a dense operator matrix is materialized.

    Usage example
    -------------
        tol = ToleranceConfig().with_overrides({"lumpability": 1e-8})
    """

    lumpability: float = 1e-10
    consistency: float = 1e-9
    dependence: float = 1e-8
    operator_cap: int = 4096

    def __post_init__(self) -> None:
        for name in ("lumpability", "consistency", "dependence"):
            value = getattr(self, name)
            if not value > 0.0:
                raise ConfigError(f"Tolerance '{name}' must be positive, got {value!r}.")
        if self.operator_cap < 1:
            raise ConfigError(f"operator_cap must be >= 1, got {self.operator_cap!r}.")

    def with_overrides(self, overrides: Mapping[str, Any]) -> "ToleranceConfig":
        """Return a copy with the non-None entries of ``overrides`` applied."""
        updates: dict[str, Any] = {}
        for name, value in overrides.items():
            if value is None:
                continue
            if name not in ("lumpability", "consistency", "dependence", "operator_cap"):
                raise ConfigError(f"Unknown tolerance '{name}'.")
            try:
                updates[name] = int(value) if name == "operator_cap" else float(value)
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"Tolerance '{name}' is not numeric: {value!r}.") from exc
        return replace(self, **updates)


_TOLERANCE_ENV = {
    "lumpability": "TOL_LUMP",
    "consistency": "TOL_CONSISTENCY",
    "dependence": "TOL_DEP",
    "operator_cap": "OPERATOR_CAP",
}


def resolve_tolerances(
    config: Mapping[str, Any],
    cli_overrides: Optional[Mapping[str, Any]] = None,
    *,
    env_prefix: str = "SZL_",
) -> ToleranceConfig:
    """
    Resolve tolerances from defaults, config file, environment and CLI flags.

    Later sources win: defaults, then the ``tolerances:`` section of the loaded
    config, then ``<PFX>TOL_*`` environment variables, then CLI flags.

    Usage example
    -------------
        tol = resolve_tolerances(load_config(Path.cwd()), {"dependence": args.tol_dep})
    """

    tolerances = ToleranceConfig()
    section = config.get("tolerances")
    if isinstance(section, dict):
        tolerances = tolerances.with_overrides(section)

    env_values = {
        name: os.environ[f"{env_prefix}{suffix}"]
        for name, suffix in _TOLERANCE_ENV.items()
        if os.getenv(f"{env_prefix}{suffix}", "").strip()
    }
    tolerances = tolerances.with_overrides(env_values)
    return tolerances.with_overrides(dict(cli_overrides or {}))


@dataclass(frozen=True)
class ErrorHandlingConfig:
    """
    Configuration for error-handling + logging behavior.

    Parameters
    ----------
    mode
        "debug" re-raises on the first failing case; "run" records failures and keeps
        going with the cases that do not depend on the failed one.
    log_dir
        Directory for the plain log file and the JSONL event log. ``None`` keeps
        logging on the console only.
    run_id
        Identifier of the run. "auto" draws a fresh short UUID.
    console_level
        Logging level for console output.
    file_level
        Logging level for file output.
    write_jsonl
        If True and ``log_dir`` is set, writes events to ``<log_dir>/events_<run_id>.jsonl``.
    max_failures
        Stop scheduling cases once this many have failed (ignored in debug mode).
    env_prefix
        Prefix of the environment overrides read by :meth:`from_env`.

    Usage example
    -------------
        cfg = ErrorHandlingConfig.from_env(default=ErrorHandlingConfig(log_dir=Path("logs")))
    """

    mode: Literal["debug", "run"] = "run"
    log_dir: Optional[Path] = None
    run_id: str = "auto"

    console_level: int = 20  # logging.INFO
    file_level: int = 10  # logging.DEBUG

    write_jsonl: bool = True
    max_failures: Optional[int] = None

    env_prefix: str = field(default="SZL_", repr=False)

    def resolved_run_id(self) -> str:
        """Return a non-auto run id."""
        if self.run_id != "auto":
            return self.run_id
        return uuid.uuid4().hex[:10]

    def pinned(self) -> "ErrorHandlingConfig":
        """Return a copy whose run id is fixed, so logger and reporter agree on it."""
        return replace(self, run_id=self.resolved_run_id())

    @classmethod
    def from_env(cls, *, default: Optional["ErrorHandlingConfig"] = None) -> "ErrorHandlingConfig":
        """
        Create config from environment variables.

        Supported variables (prefix taken from ``default.env_prefix``, "SZL_" by default):
        - <PFX>ERROR_MODE: "debug" | "run"
        - <PFX>LOG_DIR: path
        - <PFX>WRITE_JSONL: "1"/"0"
        - <PFX>MAX_FAILURES: integer

        Invalid values fall back to the corresponding field of ``default``.
        """
        base = default if default is not None else cls()
        pfx = base.env_prefix

        mode = os.getenv(f"{pfx}ERROR_MODE", base.mode).strip().lower()
        if mode not in ("debug", "run"):
            mode = base.mode

        log_dir_raw = os.getenv(f"{pfx}LOG_DIR", "").strip()
        log_dir = Path(log_dir_raw) if log_dir_raw else base.log_dir

        write_jsonl_raw = os.getenv(f"{pfx}WRITE_JSONL", "1" if base.write_jsonl else "0").strip()
        write_jsonl = write_jsonl_raw.lower() not in ("0", "false", "")

        max_failures = base.max_failures
        max_failures_raw = os.getenv(f"{pfx}MAX_FAILURES", "").strip()
        if max_failures_raw:
            try:
                max_failures = int(max_failures_raw)
            except ValueError:
                max_failures = base.max_failures

        return replace(
            base,
            mode=mode,  # type: ignore[arg-type]
            log_dir=log_dir,
            write_jsonl=write_jsonl,
            max_failures=max_failures,
        )

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Mapping, Optional, Sequence

from .guards import step
from .reporter import ErrorReporter


class PipelineError(RuntimeError):
    """Raised when the case graph cannot be scheduled (cycle or unknown dependency)."""


@dataclass(frozen=True)
class _CaseDef:
    name: str
    fn: Callable[[], Optional[float]]
    deps: tuple[str, ...]
    context: Optional[Mapping[str, Any]]


class Pipeline:
    """
    Dependency-aware runner for named cases.

    Each case callable returns its measured residual (or None) and raises on failure.

    Rules
    -----
    - A case runs only once all of its dependencies are OK.
    - A failed or skipped dependency marks the case SKIPPED.
    - Run mode keeps scheduling independent cases; debug mode raises on the first failure.
    - Ready cases run in name order, so reports are deterministic.

    Usage example
    -------------
        pipe = Pipeline(reporter)
        pipe.add("hexahedron.lump", check_lump)
        pipe.add("hexahedron.linking", check_linking, deps=["hexahedron.lump"])
        residuals = pipe.run()
    """

    def __init__(self, reporter: ErrorReporter) -> None:
        self._reporter = reporter
        self._cases: dict[str, _CaseDef] = {}

    def add(
        self,
        name: str,
        fn: Callable[[], Optional[float]],
        *,
        deps: Optional[Sequence[str]] = None,
        context: Optional[Mapping[str, Any]] = None,
    ) -> None:
        """Register a named case with optional dependencies."""
        if name in self._cases:
            raise ValueError(f"Duplicate case name: {name}")
        self._cases[name] = _CaseDef(name=name, fn=fn, deps=tuple(deps or ()), context=context)

    def _failure_budget_spent(self) -> bool:
        cfg = self._reporter.cfg
        return cfg.mode == "run" and cfg.max_failures is not None and self._reporter.failures_count() >= cfg.max_failures

    def run(self) -> dict[str, Optional[float]]:
        """
        Execute all cases in dependency order.

        Returns
        -------
        residuals
            Mapping from case name to the residual it returned, for cases that passed.
        """
        residuals: dict[str, Optional[float]] = {}
        pending = sorted(self._cases)

        while pending:
            if self._failure_budget_spent():
                for name in pending:
                    self._reporter.mark_skipped(case_name=name, caused_by="max_failures", context=self._cases[name].context)
                break

            ready = [name for name in pending if all(dep in self._cases and dep not in pending for dep in self._cases[name].deps)]
            if not ready:
                raise PipelineError(
                    "Pipeline could not make progress (cycle or undefined deps). "
                    f"Remaining cases: {', '.join(pending)}"
                )

            name = ready[0]
            pending.remove(name)
            case = self._cases[name]
            blocked_by = next((dep for dep in case.deps if not self._reporter.ok(dep)), None)
            if blocked_by is not None:
                self._reporter.mark_skipped(case_name=name, caused_by=blocked_by, context=case.context)
                continue

            with step(name, self._reporter, context=case.context) as outcome:
                outcome.residual = case.fn()
                residuals[name] = outcome.residual

        return residuals

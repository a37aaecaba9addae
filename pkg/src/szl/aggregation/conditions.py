"""
Consistency conditions that a lumpable chain must meet before its quantization aggregates.

Three checks are reported independently:

* weak reversibility: ``P_ij > 0`` iff ``P_ji > 0``;
* the cycle condition on 4-cycles ``i1 -> j1 -> i2 -> j2 -> i1`` alternating between two blocks;
* the triangle condition relating lumped and micro-level 3-cycle ratios.

Each result keeps the first witness found in vertex order so a failure can be re-checked by hand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator, Mapping, Optional

from szl.errors import DimensionMismatch
from szl.graphs.types import VertexPartition
from szl.markov.types import StochasticMatrix

DEFAULT_CONSISTENCY_TOL = 1e-9


@dataclass(frozen=True)
class ConditionResult:
    name: str
    passed: bool
    witness: Optional[Mapping[str, Any]] = None
    checked: int = 0

    def to_payload(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "checked": self.checked,
            "witness": dict(self.witness) if self.witness is not None else None,
        }


@dataclass(frozen=True)
class ConsistencyReport:
    weak_reversibility: ConditionResult
    cycle_condition: ConditionResult
    triangle_condition: ConditionResult
    tolerance: float = field(default=DEFAULT_CONSISTENCY_TOL)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results())

    def results(self) -> tuple[ConditionResult, ...]:
        return (self.weak_reversibility, self.cycle_condition, self.triangle_condition)

    def failures(self) -> list[ConditionResult]:
        return [r for r in self.results() if not r.passed]

    def to_payload(self) -> dict[str, Any]:
        payload: dict[str, Any] = {r.name: r.to_payload() for r in self.results()}
        payload["passed"] = self.passed
        payload["tolerance"] = self.tolerance
        return payload


def _relative_mismatch(lhs: float, rhs: float, tol: float) -> bool:
    return abs(lhs - rhs) > tol * max(abs(lhs), abs(rhs))


def _weak_reversibility(p: StochasticMatrix) -> ConditionResult:
    succ = p.successors
    checked = 0
    for i, row in enumerate(succ):
        for j, forward in row.items():
            checked += 1
            if i not in succ[j]:
                return ConditionResult(
                    "weak_reversibility",
                    False,
                    {"i": p.vertices[i], "j": p.vertices[j], "P_ij": forward, "P_ji": 0.0},
                    checked,
                )
    return ConditionResult("weak_reversibility", True, None, checked)


def _four_cycles(p: StochasticMatrix, block: list[int]) -> Iterator[tuple[int, int, int, int]]:
    """Walks ``i1 -> j1 -> i2 -> j2`` with ``i1, i2`` in one block and ``j1, j2`` in another."""
    succ = p.successors
    for i1, row in enumerate(succ):
        for j1 in row:
            for i2 in succ[j1]:
                if block[i2] != block[i1]:
                    continue
                for j2 in succ[i2]:
                    if block[j2] == block[j1]:
                        yield i1, j1, i2, j2


def _cycle_condition(p: StochasticMatrix, block: list[int], tol: float) -> ConditionResult:
    succ = p.successors
    checked = 0
    for i1, j1, i2, j2 in _four_cycles(p, block):
        back = (succ[j2].get(i1), succ[i1].get(j2), succ[j2].get(i2), succ[i2].get(j1), succ[j1].get(i1))
        if any(value is None for value in back):
            continue
        checked += 1
        lhs = succ[i1][j1] * succ[j1][i2] * succ[i2][j2] * back[0]
        rhs = back[1] * back[2] * back[3] * back[4]
        if _relative_mismatch(lhs, rhs, tol):
            names = [p.vertices[x] for x in (i1, j1, i2, j2)]
            return ConditionResult(
                "cycle_condition",
                False,
                {"i1": names[0], "j1": names[1], "i2": names[2], "j2": names[3], "lhs": lhs, "rhs": rhs},
                checked,
            )
    return ConditionResult("cycle_condition", True, None, checked)


def _triangle_condition(
    p: StochasticMatrix, block: list[int], lumped: StochasticMatrix, tol: float
) -> ConditionResult:
    succ = p.successors
    coarse = lumped.successors
    checked = 0
    for i, row in enumerate(succ):
        for j in row:
            if j == i:
                continue
            for k in succ[j]:
                if k in (i, j) or k not in row:
                    continue
                reverse = (succ[j].get(i), succ[k].get(j), succ[k].get(i))
                if any(value is None for value in reverse):
                    continue
                u, v, w = block[i], block[j], block[k]
                lumped_terms = (
                    coarse[u].get(v),
                    coarse[v].get(w),
                    coarse[w].get(u),
                    coarse[u].get(w),
                    coarse[w].get(v),
                    coarse[v].get(u),
                )
                if any(value is None for value in lumped_terms):
                    continue
                checked += 1
                lhs = (lumped_terms[0] * lumped_terms[1] * lumped_terms[2]) / (
                    lumped_terms[3] * lumped_terms[4] * lumped_terms[5]
                )
                rhs = (row[j] * succ[j][k] * reverse[2]) / (row[k] * reverse[1] * reverse[0])
                if _relative_mismatch(lhs, rhs, tol):
                    return ConditionResult(
                        "triangle_condition",
                        False,
                        {"i": p.vertices[i], "j": p.vertices[j], "k": p.vertices[k], "lhs": lhs, "rhs": rhs},
                        checked,
                    )
    return ConditionResult("triangle_condition", True, None, checked)


def check_conditions(
    p: StochasticMatrix,
    part: VertexPartition,
    p_lumped: StochasticMatrix,
    tol: float = DEFAULT_CONSISTENCY_TOL,
) -> ConsistencyReport:
    """
    Evaluate weak reversibility, the cycle condition and the triangle condition.

    Products are compared with relative tolerance ``tol``. Failures are reported, not raised.

    Parameters
    ----------
    p
        Micro-level chain.
    part
        Partition along which ``p`` was lumped.
    p_lumped
        ``lump(p, part)``; its vertices are the block labels.

    Usage example
    -------------
        report = check_conditions(p, part, lump(p, part))
        report.passed
    """
    part.validate_for(p.vertices)
    if p_lumped.vertices != part.labels:
        raise DimensionMismatch(
            "Lumped matrix vertices must be the partition's block labels.",
            witness={"lumped": list(p_lumped.vertices), "labels": list(part.labels)},
        )
    block = [part.label_index[part.block_of[v]] for v in p.vertices]
    return ConsistencyReport(
        weak_reversibility=_weak_reversibility(p),
        cycle_condition=_cycle_condition(p, block, tol),
        triangle_condition=_triangle_condition(p, block, p_lumped, tol),
        tolerance=tol,
    )

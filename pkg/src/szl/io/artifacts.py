"""JSON and CSV codecs for graphs, chains, states and CMV data."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence, cast

import numpy as np

from szl.aggregation.basis import AggregatedBasis
from szl.aggregation.conditions import ConsistencyReport
from szl.aggregation.linking import LinkingCoefficients
from szl.cmv.types import CmvMatrix, VerblunskySequence
from szl.graphs.types import DirectedGraph, VertexPartition
from szl.markov.types import BirthDeathChain, Distribution, StochasticMatrix
from szl.szegedy.basis import ArcBasis, WalkerState
from szl.szegedy.operator import SzegedyOperator, operator_sparse


def render_json(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def write_text(text: str, path: Optional[Path]) -> None:
    """Write ``text`` to ``path``, or to stdout when ``path`` is None."""
    if path is None:
        print(text, end="")
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def write_json(payload: Any, path: Optional[Path]) -> None:
    write_text(render_json(payload), path)


def read_json(path: Path, *, expected_type: str) -> dict[str, Any]:
    payload = cast(dict[str, Any], json.loads(path.read_text()))
    artifact_type = payload.get("type")
    if artifact_type != expected_type:
        raise ValueError(f"Expected artifact type '{expected_type}', got '{artifact_type}'.")
    return payload


def _format_float(value: float) -> str:
    return format(float(value), ".17g")


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_format_float(x) if isinstance(x, (float, np.floating)) else x for x in row])
    return buffer.getvalue()


# ##########  graphs  ##########


def dump_graph(g: DirectedGraph) -> dict[str, Any]:
    return {"type": "graph", "vertices": list(g.vertices), "arcs": [list(arc) for arc in g.arcs]}


def parse_graph(payload: dict[str, Any]) -> DirectedGraph:
    return DirectedGraph.build(payload["vertices"], [(str(i), str(j)) for i, j in payload["arcs"]])


def load_graph(path: Path) -> DirectedGraph:
    return parse_graph(read_json(path, expected_type="graph"))


def dump_partition(part: VertexPartition) -> dict[str, Any]:
    return {"type": "partition", "labels": list(part.labels), "blocks": [list(b) for b in part.blocks]}


def parse_partition(payload: dict[str, Any]) -> VertexPartition:
    blocks = tuple(tuple(str(v) for v in block) for block in payload["blocks"])
    return VertexPartition(blocks=blocks, labels=tuple(payload.get("labels") or ()))


def load_partition(path: Path) -> VertexPartition:
    return parse_partition(read_json(path, expected_type="partition"))


# ##########  chains  ##########


def dump_matrix(p: StochasticMatrix) -> dict[str, Any]:
    return {"type": "stochastic_matrix", "vertices": list(p.vertices), "rows": p.dense().tolist()}


def parse_matrix(payload: dict[str, Any]) -> StochasticMatrix:
    return StochasticMatrix.from_dense(payload["vertices"], payload["rows"])


def load_matrix(path: Path) -> StochasticMatrix:
    return parse_matrix(read_json(path, expected_type="stochastic_matrix"))


def matrix_csv(p: StochasticMatrix) -> str:
    rows = ([vertex, *(float(x) for x in row)] for vertex, row in zip(p.vertices, p.dense()))
    return render_csv(("vertex", *p.vertices), rows)


def dump_chain(c: BirthDeathChain) -> dict[str, Any]:
    return {"type": "birth_death_chain", "p": list(c.p), "q": list(c.q), "r": list(c.r)}


def parse_chain(payload: dict[str, Any]) -> BirthDeathChain:
    return BirthDeathChain(
        p=tuple(float(x) for x in payload["p"]),
        q=tuple(float(x) for x in payload["q"]),
        r=tuple(float(x) for x in payload["r"]),
    )


def distribution_csv(dist: Distribution) -> str:
    return render_csv(("vertex", "probability"), zip(dist.vertices, (float(x) for x in dist.probabilities)))


def time_series_csv(series: Sequence[Distribution]) -> str:
    rows = (
        (t, vertex, float(prob))
        for t, dist in enumerate(series)
        for vertex, prob in zip(dist.vertices, dist.probabilities)
    )
    return render_csv(("step", "vertex", "probability"), rows)


def dump_time_series(series: Sequence[Distribution]) -> dict[str, Any]:
    return {
        "type": "time_series",
        "vertices": list(series[0].vertices) if series else [],
        "steps": [[float(x) for x in dist.probabilities] for dist in series],
    }


# ##########  states  ##########


def dump_state(s: WalkerState) -> dict[str, Any]:
    return {"type": "walker_state", "amplitudes": [[i, j, value] for i, j, value in s.items()]}


def parse_state(payload: dict[str, Any], basis: ArcBasis) -> WalkerState:
    entries = {(str(i), str(j)): float(value) for i, j, value in payload["amplitudes"]}
    return WalkerState.from_amplitudes(basis, entries)


def load_state(path: Path, basis: ArcBasis) -> WalkerState:
    return parse_state(read_json(path, expected_type="walker_state"), basis)


def dump_linking(s: LinkingCoefficients) -> dict[str, Any]:
    return {"type": "linking_coefficients", "components": s.components, "s": [list(entry) for entry in s.entries]}


def parse_linking(payload: dict[str, Any]) -> LinkingCoefficients:
    entries = tuple((str(i), str(v), float(value)) for i, v, value in payload["s"])
    return LinkingCoefficients(entries=entries, components=int(payload.get("components", 1)))


def load_linking(path: Path) -> LinkingCoefficients:
    return parse_linking(read_json(path, expected_type="linking_coefficients"))


def dump_report(report: ConsistencyReport) -> dict[str, Any]:
    return {"type": "consistency_report", **report.to_payload()}


# ##########  cmv  ##########


def dump_verblunsky(v: VerblunskySequence) -> dict[str, Any]:
    return {"type": "verblunsky", "alphas": list(v.alphas), "boundary_trusted_up_to": v.boundary_trusted_up_to}


def parse_verblunsky(payload: dict[str, Any]) -> VerblunskySequence:
    trusted = payload.get("boundary_trusted_up_to")
    return VerblunskySequence(
        alphas=tuple(float(a) for a in payload["alphas"]),
        boundary_trusted_up_to=None if trusted is None else int(trusted),
    )


def load_verblunsky(path: Path) -> VerblunskySequence:
    return parse_verblunsky(read_json(path, expected_type="verblunsky"))


def cmv_csv(c: CmvMatrix) -> str:
    header = [f"c{k}" for k in range(c.size)]
    return render_csv(header, ([float(x) for x in row] for row in c.entries))


# ##########  operators  ##########


def _action_entries(op: SzegedyOperator) -> list[tuple[str, str, str, str, float]]:
    """``(i, j, k, l, <k l| U |i j>)`` for every nonzero entry, by source arc then target arc."""
    arcs = op.basis
    u = operator_sparse(op).tocsc()
    u.sort_indices()
    entries = []
    for a in range(len(arcs)):
        start, stop = u.indptr[a], u.indptr[a + 1]
        for b, value in zip(u.indices[start:stop], u.data[start:stop]):
            if value != 0.0:
                entries.append((*arcs.labelled(a), *arcs.labelled(int(b)), float(value)))
    return entries


def dump_action(op: SzegedyOperator) -> dict[str, Any]:
    """Action table of ``U`` on the arc basis: the image of every basis arc."""
    images: dict[tuple[str, str], list[list[Any]]] = {arc: [] for arc in map(op.basis.labelled, range(len(op.basis)))}
    for i, j, k, l, value in _action_entries(op):
        images[(i, j)].append([k, l, value])
    return {
        "type": "operator_action",
        "vertices": list(op.vertices),
        "action": [{"arc": [i, j], "image": image} for (i, j), image in images.items()],
    }


def action_csv(op: SzegedyOperator) -> str:
    return render_csv(("i", "j", "k", "l", "amplitude"), _action_entries(op))


def dump_aggregated_basis(basis: AggregatedBasis) -> dict[str, Any]:
    return {
        "type": "aggregated_basis",
        "states": [{"pair": list(pair), "amplitudes": dump_state(s)["amplitudes"]} for pair, s in zip(basis.pairs, basis.states)],
    }


def linking_csv(s: LinkingCoefficients) -> str:
    return render_csv(("vertex", "block", "s"), s.entries)

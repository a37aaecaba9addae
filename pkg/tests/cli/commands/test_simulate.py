import json
from pathlib import Path

import numpy as np
import pytest

from szl.cli.main import main
from szl.graphs import generate
from szl.io import dump_state, write_json
from szl.markov import homogeneous_walk
from szl.szegedy import SzegedyOperator, WalkerState


def _run(tmp_path: Path, *extra: str) -> dict:
    out = tmp_path / "series.json"
    assert main(["simulate", *extra, "--out", str(out)]) == 0
    return json.loads(out.read_text())


def test_quantum_walk_from_root(tmp_path: Path) -> None:
    payload = _run(tmp_path, "--graph", "hexahedron", "--steps", "2")

    assert payload["initial"] == "phi:000"
    assert len(payload["steps"]) == 3
    first = dict(zip(payload["vertices"], payload["steps"][1]))
    assert first["001"] == pytest.approx(1 / 3)
    assert first["000"] == pytest.approx(0.0)


def test_lumped_walk_starts_at_first_block(tmp_path: Path) -> None:
    payload = _run(tmp_path, "--graph", "hexahedron", "--partition", "distance", "--steps", "1")

    assert payload["vertices"] == ["A", "B", "C", "D"]
    assert payload["steps"][1] == pytest.approx([0.0, 1.0, 0.0, 0.0])


def test_classical_walk(tmp_path: Path) -> None:
    payload = _run(tmp_path, "--graph", "tetrahedron", "--classical", "--initial", "vertex:0", "--steps", "2")

    second = dict(zip(payload["vertices"], payload["steps"][2]))
    assert second["0"] == pytest.approx(1 / 3)
    assert sum(second.values()) == pytest.approx(1.0)


def test_arc_start_csv(tmp_path: Path) -> None:
    out = tmp_path / "series.csv"

    code = main(
        ["simulate", "--graph", "tetrahedron", "--initial", "arc:0,1", "--steps", "1", "--format", "csv", "--out", str(out)]
    )

    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "step,vertex,probability"
    assert lines[1] == "0,0,1"
    assert len(lines) == 1 + 2 * 4


@pytest.mark.parametrize(
    "extra",
    [
        ["--initial", "spin:0"],
        ["--initial", "arc:0"],
        ["--classical", "--initial", "arc:0,1"],
        ["--classical", "--initial", "state:s.json"],
        ["--steps", "-1"],
    ],
)
def test_bad_simulation_settings_are_usage_errors(extra: list[str]) -> None:
    assert main(["simulate", "--graph", "tetrahedron", *extra]) == 2


def test_unknown_start_vertex_is_a_domain_error(tmp_path: Path) -> None:
    out = tmp_path / "err.json"

    assert main(["simulate", "--graph", "tetrahedron", "--initial", "phi:9", "--out", str(out)]) == 1
    assert json.loads(out.read_text())["error"] == "UnknownVertex"


def test_state_file_start_matches_arc_start(tmp_path: Path) -> None:
    op = SzegedyOperator(homogeneous_walk(generate("tetrahedron")))
    write_json(dump_state(WalkerState.basis_vector(op.basis, "0", "1")), tmp_path / "s.json")

    from_file = _run(tmp_path, "--graph", "tetrahedron", "--initial", f"state:{tmp_path / 's.json'}", "--steps", "3")
    from_arc = _run(tmp_path, "--graph", "tetrahedron", "--initial", "arc:0,1", "--steps", "3")

    np.testing.assert_allclose(from_file["steps"], from_arc["steps"], atol=1e-12)
    assert from_file["steps"][0][0] == pytest.approx(1.0)

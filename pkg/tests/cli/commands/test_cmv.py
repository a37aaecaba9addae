import json
from pathlib import Path

import pytest

from szl.cli.main import main

HEXAHEDRON_ALPHAS = [0.0, -1 / 3, 0.0, 1 / 3, 0.0, 1.0]


def _run(tmp_path: Path, *extra: str) -> dict:
    out = tmp_path / "v.json"
    assert main(["cmv", *extra, "--out", str(out)]) == 0
    return json.loads(out.read_text())


def test_lumped_hexahedron(tmp_path: Path) -> None:
    payload = _run(tmp_path, "--graph", "hexahedron", "--geronimus", "--jacobi")

    assert payload["type"] == "verblunsky"
    assert payload["block"] == "A"
    assert payload["walk"] == "lumped"
    assert payload["alphas"] == pytest.approx(HEXAHEDRON_ALPHAS, abs=1e-9)
    assert payload["geronimus"]["q"] == pytest.approx([0.0, 1 / 3, 2 / 3, 1.0], abs=1e-9)
    assert payload["jacobi"]["r"] == pytest.approx([0.0] * 4, abs=1e-9)


@pytest.mark.parametrize("method", ["recurrence", "orthonormalize"])
def test_full_octahedron(tmp_path: Path, method: str) -> None:
    payload = _run(tmp_path, "--graph", "octahedron", "--full", "--method", method)

    assert payload["walk"] == "full"
    assert payload["alphas"] == pytest.approx([0.0, -1 / 2, 2 / 3, 1 / 5, 1.0], abs=1e-9)


def test_full_walk_from_wide_block_uses_aggregation(tmp_path: Path) -> None:
    payload = _run(tmp_path, "--graph", "hexahedron", "--full", "--root", "011")

    assert payload["block"] == "C"
    assert len(payload["alphas"]) >= 2


def test_free_ball_marks_trusted_prefix(tmp_path: Path) -> None:
    payload = _run(tmp_path, "--graph", "free_ball", "--generators", "2", "--radius", "4")

    assert payload["boundary_trusted_up_to"] == 4
    assert payload["alphas"][1] == pytest.approx(-1 / 2, abs=1e-9)


def test_cmv_matrix_csv(tmp_path: Path) -> None:
    out = tmp_path / "c.csv"

    assert main(["cmv", "--graph", "tetrahedron", "--format", "csv", "--out", str(out)]) == 0

    assert out.read_text().splitlines()[0] == "c0,c1,c2"


def test_unknown_root_is_a_domain_error(tmp_path: Path) -> None:
    out = tmp_path / "err.json"

    assert main(["cmv", "--graph", "hexahedron", "--root", "999", "--out", str(out)]) == 1
    assert json.loads(out.read_text())["error"] == "UnknownVertex"


def test_sequence_from_file(tmp_path: Path) -> None:
    source = tmp_path / "alphas.json"
    source.write_text(json.dumps({"type": "verblunsky", "alphas": HEXAHEDRON_ALPHAS}))

    payload = _run(tmp_path, "--from-file", str(source), "--geronimus")

    assert payload["source"] == str(source)
    assert payload["alphas"] == pytest.approx(HEXAHEDRON_ALPHAS)
    assert payload["geronimus"]["q"] == pytest.approx([0.0, 1 / 3, 2 / 3, 1.0], abs=1e-12)


def test_sequence_file_excludes_graph(tmp_path: Path) -> None:
    source = tmp_path / "alphas.json"
    source.write_text(json.dumps({"type": "verblunsky", "alphas": HEXAHEDRON_ALPHAS}))

    assert main(["cmv", "--graph", "hexahedron", "--from-file", str(source)]) == 2

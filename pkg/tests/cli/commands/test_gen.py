import json
from pathlib import Path

from szl.cli.main import main


def test_gen_writes_graph_json(tmp_path: Path) -> None:
    out = tmp_path / "cube.json"

    assert main(["gen", "hexahedron", "--out", str(out)]) == 0

    payload = json.loads(out.read_text())
    assert payload["type"] == "graph"
    assert len(payload["vertices"]) == 8
    assert len(payload["arcs"]) == 24


def test_gen_free_ball_csv(tmp_path: Path) -> None:
    out = tmp_path / "ball.csv"

    code = main(["gen", "free_ball", "--generators", "2", "--radius", "2", "--format", "csv", "--out", str(out)])

    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "source,target"
    assert len(lines) == 1 + 2 * 16


def test_gen_unknown_family_is_a_domain_error(tmp_path: Path) -> None:
    out = tmp_path / "err.json"

    assert main(["gen", "klein_bottle", "--out", str(out)]) == 1
    assert json.loads(out.read_text())["error"] == "InvalidParams"

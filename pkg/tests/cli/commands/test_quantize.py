import json
from pathlib import Path

import pytest

from szl.cli.main import main


def test_quantize_full_hexahedron(tmp_path: Path) -> None:
    out = tmp_path / "u.json"

    assert main(["quantize", "--graph", "hexahedron", "--out", str(out)]) == 0

    payload = json.loads(out.read_text())
    images = {tuple(entry["arc"]): entry["image"] for entry in payload["action"]}
    assert len(images) == 24
    image = {(k, l): value for k, l, value in images[("000", "001")]}
    assert image == {
        ("001", "000"): pytest.approx(-1 / 3),
        ("010", "000"): pytest.approx(2 / 3),
        ("100", "000"): pytest.approx(2 / 3),
    }


def test_quantize_lumped_csv(tmp_path: Path) -> None:
    out = tmp_path / "u.csv"

    assert main(["quantize", "--graph", "tetrahedron", "--partition", "distance", "--format", "csv", "--out", str(out)]) == 0

    lines = out.read_text().splitlines()
    assert lines[0] == "i,j,k,l,amplitude"
    assert "A,B,B,A,1" in lines

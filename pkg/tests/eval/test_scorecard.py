import csv
import json
from pathlib import Path

from szl.eval.scorecard import summarize, summarize_by_section, write_report_to_dir

ROWS = [
    {"case": "b", "section": "cmv", "status": "ok", "residual": 2e-16, "tolerance": 1e-10},
    {"case": "a", "section": "cmv", "status": "failed", "residual": 1e-3, "tolerance": 1e-10,
     "error": "GoldenMismatch", "message": "deviates"},
    {"case": "c", "section": "platonic", "status": "skipped", "residual": None, "tolerance": 1e-12},
]


def test_summaries() -> None:
    summary = summarize(ROWS)

    assert summary == {"ok": 1, "failed": 1, "skipped": 1, "cases": 3, "max_residual": 1e-3}
    assert summarize_by_section(ROWS)["platonic"]["max_residual"] is None


def test_report_files_are_sorted_and_flat(tmp_path: Path) -> None:
    write_report_to_dir(ROWS, tmp_path / "verify", metadata={"suite": "golden"})

    payload = json.loads((tmp_path / "verify" / "report.json").read_text())
    assert payload["type"] == "verify_report"
    assert [row["case"] for row in payload["results"]] == ["a", "b", "c"]
    assert payload["by_section"]["cmv"]["failed"] == 1
    assert payload["metadata"] == {"suite": "golden"}

    with open(tmp_path / "verify" / "report.csv", newline="") as handle:
        rows = list(csv.DictReader(handle))
    assert list(rows[0]) == ["case", "section", "status", "residual", "tolerance"]
    assert rows[2]["residual"] == ""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Any, Dict, List

from szl.io import render_json
from szl.eval.harness import REPORT_FIELDS


def summarize(rows: List[Dict[str, Any]]) -> Dict[str, Any]:
    counts = {"ok": 0, "failed": 0, "skipped": 0}
    for row in rows:
        counts[str(row["status"])] = counts.get(str(row["status"]), 0) + 1
    residuals = [float(row["residual"]) for row in rows if row.get("residual") is not None]
    return {**counts, "cases": len(rows), "max_residual": max(residuals) if residuals else None}


def summarize_by_section(rows: List[Dict[str, Any]]) -> Dict[str, Dict[str, Any]]:
    by: Dict[str, List[Dict[str, Any]]] = {}
    for row in rows:
        by.setdefault(str(row["section"]), []).append(row)
    return {section: summarize(section_rows) for section, section_rows in by.items()}


def write_report(
    path_json: Path,
    path_csv: Path,
    rows: List[Dict[str, Any]],
    metadata: Dict[str, Any] | None = None,
) -> None:
    """Write the verify report as JSON (rows, summaries, metadata) and as a flat CSV."""
    sorted_rows = sorted(rows, key=lambda row: (str(row["section"]), str(row["case"])))
    payload = {
        "type": "verify_report",
        "results": sorted_rows,
        "summary": summarize(sorted_rows),
        "by_section": summarize_by_section(sorted_rows),
        "metadata": metadata or {},
    }
    path_json.parent.mkdir(parents=True, exist_ok=True)
    path_json.write_text(render_json(payload))

    path_csv.parent.mkdir(parents=True, exist_ok=True)
    with open(path_csv, "w", newline="") as handle:
        writer = csv.DictWriter(
            handle, fieldnames=list(REPORT_FIELDS), extrasaction="ignore", lineterminator="\n"
        )
        writer.writeheader()
        for row in sorted_rows:
            writer.writerow({key: ("" if row.get(key) is None else row[key]) for key in REPORT_FIELDS})


def write_report_to_dir(
    rows: List[Dict[str, Any]], out_dir: Path, metadata: Dict[str, Any] | None = None
) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    write_report(out_dir / "report.json", out_dir / "report.csv", rows, metadata)

"""Poset files and report serialization."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .faces import ComparisonReport
from .poset import Poset, build_poset

CSV_COLUMNS = (
    "poset_id", "d", "levels", "f0", "f1_O", "f1_C", "tri_O", "tri_C",
    "estar_O", "estar_C", "dstar_O", "dstar_C", "has_x", "formula",
    "equality_holds", "consistent",
)


class PosetFileError(ValueError):
    pass


def poset_to_json(P: Poset) -> str:
    """Canonical one-line encoding: fields ``d, covers, labels``, covers sorted."""
    doc: dict = {"d": P.d, "covers": [list(c) for c in sorted(P.covers)]}
    if P.labels:
        doc["labels"] = list(P.labels)
    return json.dumps(doc, separators=(",", ":")) + "\n"


def poset_from_json(text: str) -> Poset:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PosetFileError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "d" not in doc:
        raise PosetFileError("poset file needs an object with field 'd'")
    d = doc["d"]
    covers = doc.get("covers", [])
    if not isinstance(d, int) or isinstance(d, bool):
        raise PosetFileError("'d' must be an integer")
    if not isinstance(covers, list) or not all(
        isinstance(c, list) and len(c) == 2 and all(isinstance(v, int) for v in c)
        for c in covers
    ):
        raise PosetFileError("'covers' must be a list of [i, j] integer pairs")
    labels = doc.get("labels")
    if labels is not None and not (
        isinstance(labels, list) and all(isinstance(s, str) for s in labels)
    ):
        raise PosetFileError("'labels' must be a list of strings")
    try:
        return build_poset(d, covers, labels)
    except ValueError as exc:
        raise PosetFileError(str(exc)) from exc


def read_poset(path: str | Path) -> Poset:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise PosetFileError(f"cannot read {path}: {exc}") from exc
    return poset_from_json(text)


def write_poset(P: Poset, path: str | Path) -> None:
    Path(path).write_text(poset_to_json(P))


def report_row(report: ComparisonReport, poset_id: str = "") -> dict:
    """Flat record in CSV column order; booleans become 0/1."""
    return {
        "poset_id": poset_id,
        "d": report.d,
        "levels": "-".join(map(str, report.levels)) if report.levels else "",
        "f0": report.f0_O,
        "f1_O": report.f1_O,
        "f1_C": report.f1_C,
        "tri_O": report.tri_O,
        "tri_C": report.tri_C,
        "estar_O": report.estar_O_count,
        "estar_C": report.estar_C_count,
        "dstar_O": report.dstar_O_count,
        "dstar_C": report.dstar_C_count,
        "has_x": int(report.has_x),
        "formula": "" if report.formula_value is None else report.formula_value,
        "equality_holds": int(report.equality_holds),
        "consistent": int(report.consistent),
    }


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def report_to_json(report: ComparisonReport, poset_id: str = "") -> str:
    doc = {"poset_id": poset_id, **report.to_dict(), "consistent": report.consistent}
    if doc["levels"] is not None:
        doc["levels"] = list(doc["levels"])
    return json.dumps(doc, indent=2) + "\n"

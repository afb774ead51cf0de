"""CSV and text-table reports of benchmark runs."""

import io
import logging
from pathlib import Path
from typing import List, Sequence, Tuple, Union

import pandas as pd

from bench.instances import instance_class
from bench.runner import RunRecord

logger = logging.getLogger(__name__)

COLUMNS = [
    "instance",
    "method",
    "solved",
    "best",
    "gap",
    "time_to_best_s",
    "nodes_to_best",
    "total_nodes",
    "total_time_s",
]

TABLE_NOTE = "nodes count branching decisions only; cpu/#nd are measured until the best solution"


def records_frame(records: Sequence[RunRecord]) -> pd.DataFrame:
    return pd.DataFrame([record.model_dump() for record in records], columns=COLUMNS)


def emit_csv(records: Sequence[RunRecord]) -> str:
    """CSV text with the fixed header; optional integers are left blank when unknown."""
    frame = records_frame(records)
    for column in ("best", "gap"):
        frame[column] = frame[column].astype("Int64")
    return frame.to_csv(index=False)


def parse_report(text: str) -> List[RunRecord]:
    """Inverse of :func:`emit_csv`."""
    frame = pd.read_csv(
        io.StringIO(text),
        dtype={"instance": str, "method": str, "best": "Int64", "gap": "Int64"},
    )
    frame = frame.astype(object).where(frame.notna(), None)
    return [RunRecord(**row) for row in frame.to_dict(orient="records")]


def format_table(records: Sequence[RunRecord]) -> str:
    """Per instance class and method: unsolved count, mean gap, mean time and nodes to best."""
    if not records:
        return f"(no runs)\n# {TABLE_NOTE}\n"
    frame = records_frame(records)
    frame["gap"] = pd.to_numeric(frame["gap"], errors="coerce")
    frame["class"] = frame["instance"].map(instance_class)
    frame["unsolved"] = ~frame["solved"].astype(bool)
    summary = (
        frame.groupby(["class", "method"], sort=True)
        .agg(
            runs=("instance", "size"),
            unsolved=("unsolved", "sum"),
            gap=("gap", "mean"),
            cpu=("time_to_best_s", "mean"),
            nd=("nodes_to_best", "mean"),
        )
        .rename(columns={"unsolved": "#s", "nd": "#nd"})
    )
    return summary.to_string(float_format=lambda x: f"{x:.2f}") + f"\n# {TABLE_NOTE}\n"


def emit_report(records: Sequence[RunRecord]) -> Tuple[str, str]:
    """The CSV text and the grouped summary table of a batch."""
    return emit_csv(records), format_table(records)


def write_report(records: Sequence[RunRecord], path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(emit_csv(records), encoding="utf-8")
    logger.info(f"Wrote {len(records)} records to {path}")
    return path

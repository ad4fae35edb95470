from __future__ import annotations
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple

from ..clustering.base import ClusterAssignment
from ..core.errors import EdgeListError
from ..core.features import FeatureMatrix
from ..core.undefined import is_undefined, parse_value
from ..measures.vector import CSV_HEADER, MEASURE_COLUMNS
from .serialize import read_csv, write_csv

FeatureRow = Tuple[str, List[float]]


def write_feature_csv(rows: Iterable[FeatureRow], path: str | Path) -> Path:
    """``user_id`` plus the measure columns and the ``assort_undef`` flag, in id order."""

    ordered = sorted(rows, key=lambda r: r[0])
    return write_csv(path, CSV_HEADER, ([node_id, *values] for node_id, values in ordered))


def read_feature_csv(path: str | Path, columns: Sequence[str] = MEASURE_COLUMNS) -> FeatureMatrix:
    header, rows = read_csv(path)
    if tuple(header[: len(CSV_HEADER)]) != CSV_HEADER:
        raise EdgeListError(f"unexpected feature header {','.join(header)!r}", path=str(path), line=1)
    ids: List[str] = []
    values: List[List[float]] = []
    for lineno, row in enumerate(rows, start=2):
        if len(row) != len(header):
            raise EdgeListError(f"expected {len(header)} fields, got {len(row)}", path=str(path), line=lineno)
        try:
            parsed = [parse_value(x) for x in row[1:]]
        except ValueError:
            raise EdgeListError(f"non-numeric feature value in {row!r}", path=str(path), line=lineno) from None
        if any(is_undefined(x) for x in parsed):
            # tables are written with undefined assortativity already imputed
            raise EdgeListError(f"undefined feature value in {row!r}", path=str(path), line=lineno)
        values.append(parsed)  # type: ignore[arg-type]
        ids.append(row[0])
    if not ids:
        raise EdgeListError("no feature rows", path=str(path))
    try:
        full = FeatureMatrix(ids, header[1:], values)
        return full.select_columns(columns)
    except ValueError as exc:
        raise EdgeListError(str(exc), path=str(path)) from None


def write_assignment_csv(assignment: ClusterAssignment, path: str | Path) -> Path:
    return write_csv(path, ("user_id", "cluster"), zip(assignment.ids, assignment.labels))

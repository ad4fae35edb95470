from __future__ import annotations
from dataclasses import dataclass
from typing import Any, Sequence, Tuple

import numpy as np


@dataclass(frozen=True, slots=True)
class FeatureMatrix:
    """Observations x measures, with the observation ids in row order."""

    ids: Tuple[str, ...]
    columns: Tuple[str, ...]
    values: np.ndarray
    standardized: bool = False
    constant_columns: Tuple[str, ...] = ()

    _SAME = object()

    def __post_init__(self) -> None:
        object.__setattr__(self, "ids", tuple(self.ids))
        object.__setattr__(self, "columns", tuple(self.columns))
        values = np.array(self.values, dtype=float)
        if values.ndim != 2 or values.shape != (len(self.ids), len(self.columns)):
            raise ValueError(f"values shape {values.shape} does not match {len(self.ids)} ids x {len(self.columns)} columns")
        if len(set(self.columns)) != len(self.columns):
            raise ValueError(f"Duplicate column names: {self.columns}")
        if np.isnan(values).any():
            raise ValueError("Feature matrix has missing values")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.ids)

    @property
    def p(self) -> int:
        return len(self.columns)

    def replace(
        self,
        *,
        ids: Any = _SAME,
        columns: Any = _SAME,
        values: Any = _SAME,
        standardized: Any = _SAME,
        constant_columns: Any = _SAME,
    ) -> FeatureMatrix:
        same = FeatureMatrix._SAME
        return FeatureMatrix(
            self.ids if ids is same else tuple(ids),
            self.columns if columns is same else tuple(columns),
            self.values if values is same else values,
            self.standardized if standardized is same else standardized,
            self.constant_columns if constant_columns is same else tuple(constant_columns),
        )

    def select_columns(self, names: Sequence[str]) -> FeatureMatrix:
        idx = [self.columns.index(c) for c in names]
        return self.replace(columns=names, values=self.values[:, idx])

    def drop_column(self, j: int) -> FeatureMatrix:
        keep = [c for i, c in enumerate(self.columns) if i != j]
        return self.replace(columns=keep, values=np.delete(self.values, j, axis=1))

    def take_rows(self, rows: Sequence[int]) -> FeatureMatrix:
        rows = list(rows)
        return self.replace(ids=[self.ids[i] for i in rows], values=self.values[rows, :])

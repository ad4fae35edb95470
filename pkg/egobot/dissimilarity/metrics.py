from __future__ import annotations
import logging
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.spatial.distance import pdist, squareform
from scipy.stats import kendalltau, rankdata

from ..core.features import FeatureMatrix
from ..ops.serialize import write_csv

logger = logging.getLogger(__name__)


class DistanceMethod(str, Enum):
    EUCLIDEAN = "euclidean"
    PEARSON = "pearson"
    SPEARMAN = "spearman"
    KENDALL = "kendall"

    @property
    def is_correlation(self) -> bool:
        return self is not DistanceMethod.EUCLIDEAN


# correlation distances are 1 - r, spanning [0, 2]
CORRELATION_SCALE = "1-r"


@dataclass(frozen=True, slots=True)
class DissimilarityMatrix:
    """Symmetric, zero-diagonal, nonnegative n x n matrix over observations."""

    ids: Tuple[str, ...]
    d: np.ndarray
    method: Optional[DistanceMethod] = None
    constant_rows: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        d = np.array(self.d, dtype=float)
        n = len(self.ids)
        if d.shape != (n, n):
            raise ValueError(f"matrix shape {d.shape} does not match {n} ids")
        if not np.array_equal(d, d.T):
            raise ValueError("dissimilarity matrix is not symmetric")
        if np.any(np.diag(d) != 0) or np.any(d < 0):
            raise ValueError("dissimilarity matrix needs a zero diagonal and nonnegative entries")
        d.setflags(write=False)
        object.__setattr__(self, "ids", tuple(self.ids))
        object.__setattr__(self, "d", d)

    @classmethod
    def from_array(cls, d: np.ndarray, ids: Sequence[str] | None = None, method: DistanceMethod | None = None) -> DissimilarityMatrix:
        d = np.asarray(d, dtype=float)
        if ids is None:
            ids = [str(i) for i in range(d.shape[0])]
        return cls(tuple(ids), d, method)

    @property
    def n(self) -> int:
        return len(self.ids)

    @property
    def scale(self) -> str:
        if self.method is not None and self.method.is_correlation:
            return CORRELATION_SCALE
        return "raw"

    def take(self, rows: Sequence[int]) -> DissimilarityMatrix:
        rows = list(rows)
        return DissimilarityMatrix(tuple(self.ids[i] for i in rows), self.d[np.ix_(rows, rows)], self.method)


def _is_constant(x: np.ndarray) -> bool:
    return bool(np.ptp(x) == 0)


def _pearson(x: np.ndarray, y: np.ndarray) -> float:
    xc = x - x.mean()
    yc = y - y.mean()
    return float(np.dot(xc, yc) / np.sqrt(np.dot(xc, xc) * np.dot(yc, yc)))


def is_flagged(x: Sequence[float], y: Sequence[float], method: DistanceMethod | str) -> bool:
    """True when a correlation distance falls back to the constant-row convention."""

    method = DistanceMethod(method)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return method.is_correlation and not np.array_equal(x, y) and (_is_constant(x) or _is_constant(y))


def distance(x: Sequence[float], y: Sequence[float], method: DistanceMethod | str) -> float:
    """Dissimilarity of two feature rows.

    Correlation methods give ``1 - r``; a constant row has no correlation and
    sits at distance 1 (see :func:`is_flagged`).
    """

    method = DistanceMethod(method)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.ndim != 1 or x.size < 2:
        raise ValueError(f"rows must be 1-D of equal length >= 2, got {x.shape} and {y.shape}")
    if np.array_equal(x, y):
        return 0.0
    if method is DistanceMethod.EUCLIDEAN:
        return float(np.linalg.norm(x - y))
    if _is_constant(x) or _is_constant(y):
        return 1.0
    if method is DistanceMethod.PEARSON:
        r = _pearson(x, y)
    elif method is DistanceMethod.SPEARMAN:
        r = _pearson(rankdata(x), rankdata(y))
    else:
        r = float(kendalltau(x, y)[0])
    return max(0.0, 1.0 - r)


def build_dissimilarity_matrix(f: FeatureMatrix, method: DistanceMethod | str) -> DissimilarityMatrix:
    """Pairwise dissimilarities of the rows of a standardized feature matrix.

    Each unordered pair is evaluated once.
    """

    method = DistanceMethod(method)
    if not f.standardized:
        raise ValueError("build_dissimilarity_matrix expects standardized features")
    x = f.values
    constant = np.ptp(x, axis=1) == 0
    if f.n < 2:
        d = np.zeros((f.n, f.n))
    elif method is DistanceMethod.KENDALL:
        d = squareform(pdist(x, lambda u, v: distance(u, v, method)))
    else:
        if method is DistanceMethod.SPEARMAN:
            x = rankdata(x, axis=1)
        metric = "euclidean" if method is DistanceMethod.EUCLIDEAN else "correlation"
        with np.errstate(invalid="ignore", divide="ignore"):
            d = squareform(pdist(x, metric))
        if method.is_correlation and constant.any():
            d[constant, :] = 1.0
            d[:, constant] = 1.0
        d = np.clip(d, 0.0, None)
    _zero_duplicates(x, d)
    flagged: Tuple[str, ...] = ()
    if method.is_correlation and constant.any():
        flagged = tuple(i for i, c in zip(f.ids, constant) if c)
        logger.warning("%d constant row(s) under %s distance set to 1: %s", len(flagged), method.value, ", ".join(flagged[:10]))
    return DissimilarityMatrix(f.ids, d, method, flagged)


def _zero_duplicates(x: np.ndarray, d: np.ndarray) -> None:
    """Identical rows (ranks, for Spearman) sit at distance exactly 0."""

    if x.shape[0]:
        _, inverse = np.unique(x, axis=0, return_inverse=True)
        inverse = np.asarray(inverse).reshape(-1)
        d[inverse[:, None] == inverse[None, :]] = 0.0
    np.fill_diagonal(d, 0.0)


def write_dissimilarity_csv(d: DissimilarityMatrix, path: str | Path) -> Path:
    """Square CSV with the observation ids as header row and first column."""

    rows = ([i, *map(float, row)] for i, row in zip(d.ids, d.d))
    return write_csv(path, ("id", *d.ids), rows)

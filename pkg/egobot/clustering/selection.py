from __future__ import annotations
import logging
import math
from dataclasses import astuple, dataclass, fields
from pathlib import Path
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

from ..core.errors import ClusteringError
from ..core.features import FeatureMatrix
from ..core.sampling import sample_without_replacement
from ..dissimilarity.metrics import DistanceMethod, build_dissimilarity_matrix
from ..dissimilarity.standardize import standardize_columns
from ..ops.serialize import write_csv
from .methods import CLUSTERER_NAMES, clusterer
from .validation import internal_validation, stability_validation

logger = logging.getLogger(__name__)

MIN_SAMPLE = 10
K_RANGE: Tuple[int, ...] = (2, 3, 4, 5, 6)

# measures where smaller is better; the rest are maximised
_MINIMISE = frozenset({"connectivity", "apn", "ad", "adm", "fom"})


@dataclass(frozen=True, slots=True)
class ValidationRow:
    method: str
    k: int
    connectivity: float
    dunn: float
    silhouette: float
    apn: float
    ad: float
    adm: float
    fom: float


MEASURES: Tuple[str, ...] = tuple(f.name for f in fields(ValidationRow))[2:]


@dataclass(frozen=True, slots=True)
class ValidationReport:
    rows: Tuple[ValidationRow, ...]
    sample_ids: Tuple[str, ...]

    def ranked(self, measure: str) -> List[ValidationRow]:
        """Rows from best to worst on ``measure``; ties keep grid order."""

        if measure not in MEASURES:
            raise KeyError(measure)
        sign = 1.0 if measure in _MINIMISE else -1.0

        def key(row: ValidationRow) -> Tuple[bool, float]:
            value = getattr(row, measure)
            return (math.isnan(value), sign * value if not math.isnan(value) else 0.0)

        return sorted(self.rows, key=key)

    def optimal(self) -> Dict[str, ValidationRow]:
        return {m: self.ranked(m)[0] for m in MEASURES}


def sample_rows(n: int, fraction: float, seed: int) -> List[int]:
    """Seeded uniform sample without replacement, returned in row order."""

    if not 0 < fraction <= 1:
        raise ValueError(f"sample fraction must be in (0, 1], got {fraction}")
    size = max(MIN_SAMPLE, int(round(fraction * n)))
    if size > n:
        raise ClusteringError(f"need at least {MIN_SAMPLE} observations to validate, got {n}")
    rng = np.random.Generator(np.random.PCG64(seed))
    return sorted(int(i) for i in sample_without_replacement(rng, n, size))


def select_methods(
    f: FeatureMatrix,
    sample_fraction: float = 0.10,
    seed: int = 42,
    *,
    methods: Sequence[str] = CLUSTERER_NAMES,
    ks: Iterable[int] = K_RANGE,
    distance_method: DistanceMethod | str = DistanceMethod.PEARSON,
    nn: int = 10,
    memb_exp: float = 2.0,
) -> ValidationReport:
    """Internal and stability validation for every (method, k) on a seeded sample."""

    rows_idx = sample_rows(f.n, sample_fraction, seed)
    sample = f.take_rows(rows_idx)
    if not sample.standardized:
        sample = standardize_columns(sample)
    d = build_dissimilarity_matrix(sample, distance_method)
    ks = list(ks)
    logger.info("validating %d method(s) x k in %s on %d sampled observations", len(methods), ks, sample.n)
    rows: List[ValidationRow] = []
    for name in methods:
        fn = clusterer(name, memb_exp=memb_exp)
        for k in ks:
            try:
                internal = astuple(internal_validation(d, fn(d, k), nn))
                stable = astuple(stability_validation(sample, fn, k, distance_method))
            except ClusteringError as exc:
                logger.warning("validation of %s k=%d failed: %s", name, k, exc)
                internal, stable = (math.nan,) * 3, (math.nan,) * 4
            rows.append(ValidationRow(name, k, *internal, *stable))
    return ValidationReport(tuple(rows), sample.ids)


def write_validation_csv(report: ValidationReport, path: str | Path) -> Path:
    return write_csv(path, ("method", "k", *MEASURES), (astuple(r) for r in report.rows))


def write_optimal_csv(report: ValidationReport, path: str | Path) -> Path:
    best = report.optimal()
    rows = ((m, best[m].method, best[m].k, getattr(best[m], m)) for m in MEASURES)
    return write_csv(path, ("measure", "method", "k", "score"), rows)

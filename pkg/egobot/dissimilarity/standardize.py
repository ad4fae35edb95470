from __future__ import annotations
import logging

import numpy as np

from ..core.errors import ClusteringError
from ..core.features import FeatureMatrix

logger = logging.getLogger(__name__)


def standardize_columns(f: FeatureMatrix) -> FeatureMatrix:
    """z-score every column with the sample standard deviation.

    Constant columns become all-zero and are listed in ``constant_columns``.
    """

    if f.n < 2:
        raise ClusteringError(f"standardization needs >= 2 observations, got {f.n}")
    x = f.values
    constant = np.ptp(x, axis=0) == 0
    mean = x.mean(axis=0)
    sd = x.std(axis=0, ddof=1)
    sd[constant] = 1.0
    z = (x - mean) / sd
    z[:, constant] = 0.0
    names = tuple(c for c, flag in zip(f.columns, constant) if flag)
    if names:
        logger.warning("zero-variance columns set to 0: %s", ", ".join(names))
    return f.replace(values=z, standardized=True, constant_columns=names)

"""Internal and stability validation measures (clValid definitions).

References:
    G. Brock, V. Pihur, S. Datta and S. Datta, "clValid: An R Package for
    Cluster Validation", Journal of Statistical Software 25(4), 2008.
"""
from __future__ import annotations
import logging
import math
from dataclasses import dataclass
from typing import Callable, List

import numpy as np

from ..core.errors import ClusteringError
from ..core.features import FeatureMatrix
from ..dissimilarity.metrics import DissimilarityMatrix, DistanceMethod, build_dissimilarity_matrix
from .base import ClusterAssignment

logger = logging.getLogger(__name__)

AssignFn = Callable[[DissimilarityMatrix, int], ClusterAssignment]


@dataclass(frozen=True, slots=True)
class InternalScores:
    connectivity: float
    dunn: float
    silhouette: float


@dataclass(frozen=True, slots=True)
class StabilityScores:
    apn: float
    ad: float
    adm: float
    fom: float


def connectivity(d: DissimilarityMatrix, assignment: ClusterAssignment, nn: int = 10) -> float:
    """Sum of 1/j over each object's j-th nearest neighbours that sit in another cluster."""

    labels = assignment.as_array()
    n = d.n
    nn = min(nn, n - 1)
    total = 0.0
    for i in range(n):
        order = [j for j in np.argsort(d.d[i], kind="stable") if j != i][:nn]
        for rank, j in enumerate(order, start=1):
            if labels[j] != labels[i]:
                total += 1.0 / rank
    return total


def dunn_index(d: DissimilarityMatrix, assignment: ClusterAssignment) -> float:
    labels = assignment.as_array()
    same = labels[:, None] == labels[None, :]
    diameter = float(d.d[same].max())
    separation = float(d.d[~same].min())
    if diameter == 0:
        return math.inf
    return separation / diameter


def silhouette_values(d: DissimilarityMatrix, assignment: ClusterAssignment) -> np.ndarray:
    """Per-object silhouette; a singleton's within-cluster mean is taken as 0."""

    labels = assignment.as_array()
    clusters = sorted(set(labels.tolist()))
    s = np.zeros(d.n)
    for i in range(d.n):
        own = labels == labels[i]
        own[i] = False
        a = float(d.d[i, own].mean()) if own.any() else 0.0
        b = min(float(d.d[i, labels == c].mean()) for c in clusters if c != labels[i])
        top = max(a, b)
        s[i] = (b - a) / top if top > 0 else 0.0
    return s


def internal_validation(d: DissimilarityMatrix, assignment: ClusterAssignment, nn: int = 10) -> InternalScores:
    if assignment.k < 2:
        raise ClusteringError(f"internal validation needs >= 2 clusters, got {assignment.k}")
    if assignment.ids != d.ids:
        raise ValueError("assignment and dissimilarity matrix cover different observations")
    return InternalScores(
        connectivity(d, assignment, nn),
        dunn_index(d, assignment),
        float(silhouette_values(d, assignment).mean()),
    )


def stability_validation(
    f: FeatureMatrix,
    clusterer: AssignFn,
    k: int,
    distance_method: DistanceMethod | str,
) -> StabilityScores:
    """Recluster with each column left out and compare against the full clustering.

    ``f`` must be standardized. AD uses the full-data dissimilarity, ADM the
    Euclidean distance between cluster means in feature space, and FOM the
    left-out column with the ``sqrt(n / (n - k))`` bias adjustment.
    """

    if f.p < 2:
        raise ClusteringError(f"stability validation needs >= 2 columns, got {f.p}")
    full_d = build_dissimilarity_matrix(f, distance_method)
    full = clusterer(full_d, k).as_array()
    x = f.values
    n = f.n
    apn: List[float] = []
    ad: List[float] = []
    adm: List[float] = []
    fom: List[float] = []
    for col in range(f.p):
        reduced = clusterer(build_dissimilarity_matrix(f.drop_column(col), distance_method), k).as_array()
        apn_i = np.empty(n)
        ad_i = np.empty(n)
        adm_i = np.empty(n)
        for i in range(n):
            a = full == full[i]
            b = reduced == reduced[i]
            apn_i[i] = 1.0 - (a & b).sum() / a.sum()
            ad_i[i] = full_d.d[np.ix_(a, b)].mean()
            adm_i[i] = np.linalg.norm(x[a].mean(axis=0) - x[b].mean(axis=0))
        apn.append(float(apn_i.mean()))
        ad.append(float(ad_i.mean()))
        adm.append(float(adm_i.mean()))
        within = 0.0
        for c in np.unique(reduced):
            column = x[reduced == c, col]
            within += float(((column - column.mean()) ** 2).sum())
        k_used = len(np.unique(reduced))
        adjust = math.sqrt(n / (n - k_used)) if n > k_used else 1.0
        fom.append(math.sqrt(within / n) * adjust)
    return StabilityScores(
        float(np.mean(apn)),
        float(np.mean(ad)),
        float(np.mean(adm)),
        float(np.mean(fom)),
    )

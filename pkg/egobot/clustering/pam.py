"""Partitioning around medoids (Kaufman & Rousseeuw BUILD + SWAP)."""
from __future__ import annotations
import logging
from typing import List, Sequence, Tuple

import numpy as np

from ..dissimilarity.metrics import DissimilarityMatrix
from .base import ClusterAssignment, check_k

logger = logging.getLogger(__name__)


def pam_objective(dist: np.ndarray, medoids: Sequence[int]) -> float:
    """Total dissimilarity of every object to its nearest medoid."""

    cols = sorted(medoids)
    return float(np.sum(np.min(dist[:, cols], axis=1)))


def _build(dist: np.ndarray, k: int) -> List[int]:
    first = int(np.argmin(dist.sum(axis=1)))
    medoids = [first]
    nearest = dist[:, first].copy()
    while len(medoids) < k:
        gains = np.maximum(nearest[:, None] - dist, 0.0).sum(axis=0)
        gains[medoids] = -np.inf
        nxt = int(np.argmax(gains))
        medoids.append(nxt)
        nearest = np.minimum(nearest, dist[:, nxt])
    return sorted(medoids)


def _swap(dist: np.ndarray, medoids: List[int]) -> Tuple[List[int], int]:
    n = dist.shape[0]
    current = pam_objective(dist, medoids)
    swaps = 0
    while True:
        best = current
        best_set = None
        chosen = set(medoids)
        for pos in range(len(medoids)):
            for h in range(n):
                if h in chosen:
                    continue
                trial = medoids[:pos] + [h] + medoids[pos + 1:]
                cost = pam_objective(dist, trial)
                if cost < best:
                    best, best_set = cost, trial
        if best_set is None:
            return medoids, swaps
        medoids = sorted(best_set)
        current = best
        swaps += 1


def assign_to_medoids(dist: np.ndarray, medoids: Sequence[int]) -> Tuple[int, ...]:
    """Nearest medoid, ties to the lower medoid index; medoids keep their own cluster."""

    meds = sorted(medoids)
    nearest = np.argmin(dist[:, meds], axis=1)
    for pos, m in enumerate(meds):
        nearest[m] = pos
    return tuple(int(c) + 1 for c in nearest)


def pam(d: DissimilarityMatrix, k: int) -> ClusterAssignment:
    """BUILD greedy seeding, then best-improvement SWAP until no swap helps."""

    check_k(d, k, minimum=1)
    dist = d.d
    medoids, swaps = _swap(dist, _build(dist, k))
    logger.debug("pam k=%d: %d swap(s), objective %.6g", k, swaps, pam_objective(dist, medoids))
    return ClusterAssignment(d.ids, assign_to_medoids(dist, medoids), "pam", tuple(medoids))

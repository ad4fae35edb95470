"""Agglomerative nesting with unweighted average linkage (UPGMA)."""
from __future__ import annotations
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from ..core.errors import ClusteringError
from ..dissimilarity.metrics import DissimilarityMatrix
from .base import ClusterAssignment


@dataclass(frozen=True, slots=True)
class Merge:
    """One agglomeration step.

    Leaves are numbered 0..n-1; the cluster created by merge ``t`` is ``n + t``.
    """

    left: int
    right: int
    height: float
    size: int


@dataclass(frozen=True, slots=True)
class Dendrogram:
    ids: Tuple[str, ...]
    merges: Tuple[Merge, ...]

    @property
    def n(self) -> int:
        return len(self.ids)

    @property
    def heights(self) -> Tuple[float, ...]:
        return tuple(m.height for m in self.merges)

    def to_linkage(self) -> np.ndarray:
        """SciPy-style ``(n-1) x 4`` linkage matrix."""

        return np.array([[m.left, m.right, m.height, m.size] for m in self.merges], dtype=float).reshape(-1, 4)


def agnes(d: DissimilarityMatrix) -> Dendrogram:
    """Merge the closest pair of clusters by mean pairwise dissimilarity until one remains.

    A cluster lives in the matrix slot of its smallest member, so the first
    row-major minimum is the pair with the smallest member ids.
    """

    n = d.n
    if n < 2:
        raise ClusteringError(f"agnes needs n >= 2, got {n}")
    sums = np.array(d.d, dtype=float)
    sizes = np.ones(n)
    alive = np.ones(n, dtype=bool)
    avg = sums.copy()
    np.fill_diagonal(avg, np.inf)
    node = list(range(n))
    merges: List[Merge] = []
    last = 0.0
    for t in range(n - 1):
        i, j = divmod(int(np.argmin(avg)), n)
        height = max(float(avg[i, j]), last)
        merges.append(Merge(node[i], node[j], height, int(sizes[i] + sizes[j])))
        last = height
        sums[i, :] += sums[j, :]
        sums[:, i] = sums[i, :]
        sizes[i] += sizes[j]
        alive[j] = False
        row = np.where(alive, sums[i, :] / (sizes[i] * sizes), np.inf)
        row[i] = np.inf
        avg[i, :] = row
        avg[:, i] = row
        avg[j, :] = np.inf
        avg[:, j] = np.inf
        node[i] = n + t
    return Dendrogram(d.ids, tuple(merges))


def cut_dendrogram(tree: Dendrogram, k: int) -> ClusterAssignment:
    """Undo the last ``k - 1`` merges; clusters are numbered by their smallest member."""

    n = tree.n
    if not 1 <= k <= n:
        raise ClusteringError(f"k must satisfy 1 <= k <= n={n}, got {k}")
    parent = list(range(2 * n - 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t, m in enumerate(tree.merges[: n - k]):
        parent[find(m.left)] = n + t
        parent[find(m.right)] = n + t
    roots = [find(i) for i in range(n)]
    number = {}
    for r in roots:
        number.setdefault(r, len(number) + 1)
    return ClusterAssignment(tree.ids, tuple(number[r] for r in roots), "agnes")

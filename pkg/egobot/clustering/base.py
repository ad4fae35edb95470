from __future__ import annotations
from dataclasses import dataclass
from typing import Dict, List, Optional, Protocol, Sequence, Tuple

import numpy as np

from ..core.errors import ClusteringError
from ..dissimilarity.metrics import DissimilarityMatrix


@dataclass(frozen=True, slots=True)
class ClusterAssignment:
    """Crisp partition: ``labels[i]`` in 1..k for observation ``ids[i]``."""

    ids: Tuple[str, ...]
    labels: Tuple[int, ...]
    method: str
    medoids: Optional[Tuple[int, ...]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "ids", tuple(self.ids))
        object.__setattr__(self, "labels", tuple(int(x) for x in self.labels))
        if len(self.ids) != len(self.labels):
            raise ValueError(f"{len(self.ids)} ids but {len(self.labels)} labels")
        present = set(self.labels)
        if present != set(range(1, len(present) + 1)):
            raise ValueError(f"cluster labels must be 1..k with no empty cluster, got {sorted(present)}")

    @property
    def k(self) -> int:
        return len(set(self.labels))

    @property
    def n(self) -> int:
        return len(self.labels)

    def members(self, label: int) -> List[int]:
        return [i for i, c in enumerate(self.labels) if c == label]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.labels, dtype=int)

    def by_id(self) -> Dict[str, int]:
        return dict(zip(self.ids, self.labels))


def compact_labels(raw: Sequence[int]) -> Tuple[int, ...]:
    """Renumber arbitrary cluster indices to 1..k in order of first use by index value."""

    mapping = {c: i + 1 for i, c in enumerate(sorted(set(raw)))}
    return tuple(mapping[c] for c in raw)


def check_k(d: DissimilarityMatrix, k: int, *, minimum: int = 2) -> None:
    if not minimum <= k < d.n:
        raise ClusteringError(f"k must satisfy {minimum} <= k < n={d.n}, got {k}")


class Clusterer(Protocol):
    """Partitions the observations of a dissimilarity matrix into ``k`` clusters."""

    def __call__(self, d: DissimilarityMatrix, k: int) -> ClusterAssignment:
        ...

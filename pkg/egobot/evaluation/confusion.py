from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Mapping

from ..clustering.base import ClusterAssignment

logger = logging.getLogger(__name__)

BOT = 1
NOT = 0


@dataclass(frozen=True, slots=True)
class ConfusionTable:
    """Counts over the labelled observations; ``skipped`` counts unlabelled ones."""

    tp: int
    fp: int
    fn: int
    tn: int
    skipped: int = 0

    def __post_init__(self) -> None:
        for name in ("tp", "fp", "fn", "tn", "skipped"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be nonnegative, got {getattr(self, name)}")

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn

    def flipped(self) -> ConfusionTable:
        """The table of the opposite orientation: every prediction inverted."""

        return ConfusionTable(self.fn, self.tn, self.tp, self.fp, self.skipped)


@dataclass(frozen=True, slots=True)
class OrientedAssignment:
    assignment: ClusterAssignment
    bot_clusters: FrozenSet[int]
    flipped: bool

    def predicts_bot(self, node_id: str) -> bool:
        return self.assignment.by_id()[node_id] in self.bot_clusters

    def predictions(self) -> Dict[str, bool]:
        return {i: c in self.bot_clusters for i, c in zip(self.assignment.ids, self.assignment.labels)}


def _accuracy(assignment: ClusterAssignment, labels: Mapping[str, int], bot_clusters: FrozenSet[int]) -> float:
    hits = seen = 0
    for node_id, c in zip(assignment.ids, assignment.labels):
        if node_id not in labels:
            continue
        seen += 1
        hits += (c in bot_clusters) == (labels[node_id] == BOT)
    return hits / seen if seen else 0.0


def align_clusters(assignment: ClusterAssignment, labels: Mapping[str, int]) -> OrientedAssignment:
    """Orient clusters to {bot, not} by accuracy.

    With at most two clusters, cluster 2 means bot unless the swapped
    mapping is strictly more accurate. With more clusters each cluster takes
    its majority label (ties to not).
    """

    if assignment.k <= 2:
        default = frozenset({2})
        swapped = frozenset({1})
        if _accuracy(assignment, labels, swapped) > _accuracy(assignment, labels, default):
            return OrientedAssignment(assignment, swapped, True)
        return OrientedAssignment(assignment, default, False)
    votes: Dict[int, int] = {}
    for node_id, c in zip(assignment.ids, assignment.labels):
        if node_id in labels:
            votes[c] = votes.get(c, 0) + (1 if labels[node_id] == BOT else -1)
    return OrientedAssignment(assignment, frozenset(c for c, v in votes.items() if v > 0), False)


def confusion(oriented: OrientedAssignment, labels: Mapping[str, int]) -> ConfusionTable:
    tp = fp = fn = tn = skipped = 0
    for node_id, predicted_bot in oriented.predictions().items():
        if node_id not in labels:
            skipped += 1
            continue
        is_bot = labels[node_id] == BOT
        if predicted_bot and is_bot:
            tp += 1
        elif predicted_bot:
            fp += 1
        elif is_bot:
            fn += 1
        else:
            tn += 1
    if skipped:
        logger.warning("%d clustered observation(s) have no label and were skipped", skipped)
    return ConfusionTable(tp, fp, fn, tn, skipped)

from __future__ import annotations
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Sequence, Tuple

from ..core.undefined import UNDEFINED, MaybeFloat, is_undefined
from ..ops.serialize import write_csv
from .confusion import ConfusionTable

METRICS: Tuple[str, ...] = ("fpr", "tpr", "acc", "phi", "f", "prec")
RESULTS_HEADER: Tuple[str, ...] = ("distance", "graph_type", "clusterer", "flipped", "tp", "fp", "fn", "tn", *METRICS)
ROC_HEADER: Tuple[str, ...] = ("method", "fpr", "tpr")
SUMMARY_HEADER: Tuple[str, ...] = ("distance", "graph_type", "n_methods", *METRICS)

# ROC reference line for a random-guess classifier
DIAGONAL = "fpr=tpr"


@dataclass(frozen=True, slots=True)
class Metrics:
    fpr: MaybeFloat
    tpr: MaybeFloat
    acc: MaybeFloat
    phi: MaybeFloat
    f: MaybeFloat
    prec: MaybeFloat

    def values(self) -> List[MaybeFloat]:
        return [getattr(self, m) for m in METRICS]


@dataclass(frozen=True, slots=True)
class MethodKey:
    distance: str
    graph_type: str
    clusterer: str

    @property
    def label(self) -> str:
        return f"{self.distance}/{self.graph_type}/{self.clusterer}"


@dataclass(frozen=True, slots=True)
class PerformanceReport:
    method: MethodKey
    flipped: bool
    table: ConfusionTable
    metrics: Metrics

    def row(self) -> list:
        m, t = self.method, self.table
        return [m.distance, m.graph_type, m.clusterer, self.flipped, t.tp, t.fp, t.fn, t.tn, *self.metrics.values()]


@dataclass(frozen=True, slots=True)
class RocPoint:
    method: str
    fpr: MaybeFloat
    tpr: MaybeFloat

    @property
    def undefined(self) -> bool:
        return is_undefined(self.fpr) or is_undefined(self.tpr)

    @property
    def on_diagonal(self) -> bool:
        return not self.undefined and self.fpr == self.tpr


def _ratio(num: int, den: int) -> MaybeFloat:
    return num / den if den else UNDEFINED


def performance(ct: ConfusionTable) -> Metrics:
    """The six rates of a confusion table; a zero denominator leaves that rate undefined."""

    tp, fp, fn, tn = ct.tp, ct.fp, ct.fn, ct.tn
    tpr = _ratio(tp, tp + fn)
    prec = _ratio(tp, tp + fp)
    if is_undefined(tpr) or is_undefined(prec) or tpr + prec == 0:
        f: MaybeFloat = UNDEFINED
    else:
        f = 2 * prec * tpr / (prec + tpr)
    den = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn)
    phi: MaybeFloat = UNDEFINED
    if den:
        phi = min(1.0, max(-1.0, (tp * tn - fp * fn) / math.sqrt(den)))
    return Metrics(
        fpr=_ratio(fp, fp + tn),
        tpr=tpr,
        acc=_ratio(tp + tn, ct.total),
        phi=phi,
        f=f,
        prec=prec,
    )


def roc_table(reports: Iterable[PerformanceReport]) -> List[RocPoint]:
    """One ROC point per method; the random-guess reference is the ``DIAGONAL`` line."""

    return [RocPoint(r.method.label, r.metrics.fpr, r.metrics.tpr) for r in reports]


def _mean(values: Iterable[MaybeFloat]) -> MaybeFloat:
    defined = [float(v) for v in values if not is_undefined(v)]
    return sum(defined) / len(defined) if defined else UNDEFINED


def summarize(reports: Sequence[PerformanceReport]) -> List[list]:
    """Category means per distance (``graph_type`` ``*``) and per (distance, graph type)."""

    groups: Dict[Tuple[str, str], List[PerformanceReport]] = {}
    for r in reports:
        groups.setdefault((r.method.distance, "*"), []).append(r)
        groups.setdefault((r.method.distance, r.method.graph_type), []).append(r)
    rows = []
    for (dist, graph), members in groups.items():
        means = [_mean(getattr(r.metrics, m) for r in members) for m in METRICS]
        rows.append([dist, graph, len(members), *means])
    return rows


def write_results_csv(reports: Iterable[PerformanceReport], path: str | Path) -> Path:
    return write_csv(path, RESULTS_HEADER, (r.row() for r in reports))


def write_roc_csv(points: Iterable[RocPoint], path: str | Path) -> Path:
    return write_csv(path, ROC_HEADER, ((p.method, p.fpr, p.tpr) for p in points))


def write_summary_csv(reports: Sequence[PerformanceReport], path: str | Path) -> Path:
    return write_csv(path, SUMMARY_HEADER, summarize(reports))

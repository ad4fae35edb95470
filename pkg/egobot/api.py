from __future__ import annotations
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from .clustering.methods import clusterer
from .clustering.selection import ValidationReport, select_methods, write_optimal_csv, write_validation_csv
from .config import PipelineConfig
from .core.ego import Depth, extract_k2_ego_network
from .core.errors import EgobotError, UndefinedMeasureError
from .core.features import FeatureMatrix
from .core.graph import DirectedGraph, load_edge_list, load_ego_ids, load_labels
from .core.undefined import DegeneratePolicy
from .dissimilarity.metrics import DissimilarityMatrix, DistanceMethod, build_dissimilarity_matrix
from .dissimilarity.standardize import standardize_columns
from .dissimilarity.vat import render_idm, vat_order
from .evaluation.confusion import align_clusters, confusion
from .evaluation.performance import (
    MethodKey,
    PerformanceReport,
    performance,
    roc_table,
    write_results_csv,
    write_roc_csv,
    write_summary_csv,
)
from .measures.vector import compute_feature_vector, impute_degenerate
from .operators import reduce as reducers
from .ops.serialize import write_csv, write_edge_list, write_labels, write_text
from .ops.tables import FeatureRow, read_feature_csv, write_assignment_csv, write_feature_csv
from .synthgen.growth import LabeledDataset, generate_dataset

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

UNDIRECTED_MEASURES = ("gcc", "lcc", "assortativity", "articulation")
FAILURES_HEADER = ("distance", "graph_type", "clusterer", "error")


@dataclass(frozen=True, slots=True)
class Exclusion:
    user_id: str
    graph_type: str
    reason: str
    action: str


@dataclass(frozen=True, slots=True)
class EgoOutcome:
    ego_id: str
    rows: Dict[str, Optional[List[float]]]
    exclusions: Tuple[Exclusion, ...]


@dataclass(frozen=True, slots=True)
class CellTask:
    distance: str
    graph_type: str
    clusterer: str
    d: DissimilarityMatrix
    k: int
    memb_exp: float


@dataclass(frozen=True, slots=True)
class CellFailure:
    distance: str
    graph_type: str
    clusterer: str
    error: str


@dataclass(frozen=True, slots=True)
class GridResult:
    reports: Tuple[PerformanceReport, ...]
    failures: Tuple[CellFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


# ----- worker-side helpers (module level so the process pool can pickle them) -----

_WORKER_GRAPH: Optional[DirectedGraph] = None


def _set_worker_graph(g: DirectedGraph) -> None:
    global _WORKER_GRAPH
    _WORKER_GRAPH = g


def ego_features(
    g: DirectedGraph,
    ego_id: str,
    graphs: Sequence[Depth],
    reduce_expr: str = "kcore",
    min_size: int = 3,
    policy: DegeneratePolicy = DegeneratePolicy.EXCLUDE,
) -> EgoOutcome:
    """Feature rows of one ego for each requested depth, honouring the degenerate policy."""

    k2 = extract_k2_ego_network(g, ego_id)
    reducer = reducers.parse(reduce_expr)
    rows: Dict[str, Optional[List[float]]] = {}
    excluded: List[Exclusion] = []
    for depth in graphs:
        net = k2 if depth is Depth.K2 else reducer(k2)
        try:
            rows[depth.value] = compute_feature_vector(net, min_size=min_size).as_row()
        except UndefinedMeasureError as exc:
            if policy is DegeneratePolicy.IMPUTE:
                rows[depth.value] = impute_degenerate(net).as_row()
                excluded.append(Exclusion(ego_id, depth.value, str(exc), "imputed"))
            else:
                rows[depth.value] = None
                excluded.append(Exclusion(ego_id, depth.value, str(exc), "excluded"))
    return EgoOutcome(ego_id, rows, tuple(excluded))


def _worker_ego_features(args: Tuple[str, Tuple[Depth, ...], str, int, DegeneratePolicy]) -> EgoOutcome:
    assert _WORKER_GRAPH is not None
    return ego_features(_WORKER_GRAPH, *args)


def run_cell(task: CellTask) -> Tuple[CellTask, object]:
    """Cluster one grid cell; returns the assignment or the error message."""

    try:
        return task, clusterer(task.clusterer, memb_exp=task.memb_exp)(task.d, task.k)
    except (EgobotError, ValueError, ArithmeticError, np.linalg.LinAlgError) as exc:
        return task, f"{type(exc).__name__}: {exc}"


def _map(fn: Callable[[T], R], items: Iterable[T], jobs: int, **pool_kwargs) -> List[R]:
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        if "initializer" in pool_kwargs:
            pool_kwargs["initializer"](*pool_kwargs.get("initargs", ()))
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs, **pool_kwargs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


class Pipeline:
    """Thin public facade over the file-based stages.

    Every stage reads its inputs from files and writes its outputs under
    ``config.out``, so any stage can be re-run on its own.
    """

    def __init__(self, config: Optional[PipelineConfig] = None):
        self.config = config or PipelineConfig()

    # ----- paths -----
    @property
    def out(self) -> Path:
        return self.config.out

    @property
    def edges_path(self) -> Path:
        return self.config.edges or self.out / "edges.csv"

    @property
    def labels_path(self) -> Path:
        return self.config.labels or self.out / "labels.csv"

    def features_path(self, depth: Depth | str) -> Path:
        return self.out / f"{Depth(depth).value}_features.csv"

    # ----- stages -----
    def generate(self) -> LabeledDataset:
        ds = generate_dataset(self.config.generator)
        write_edge_list(ds.graph, self.out / "edges.csv")
        write_labels(ds.labels, self.out / "labels.csv")
        write_text(self.out / "generator.txt", "\n".join(ds.metadata_lines()) + "\n")
        tallies = ds.tallies()
        logger.info("wrote %d labelled nodes (%d bot, %d not) to %s", len(ds.labels), tallies["bot"], tallies["not"], self.out)
        return ds

    def ego_ids(self, g: DirectedGraph) -> List[str]:
        """Egos from ``config.egos``, else the labelled ids, else every node."""

        if self.config.egos is not None:
            return load_ego_ids(self.config.egos)
        if self.labels_path.exists():
            return sorted(load_labels(self.labels_path))
        return sorted(g.node_ids)

    def features(self) -> Dict[str, List[FeatureRow]]:
        cfg = self.config
        g = load_edge_list(self.edges_path)
        egos = self.ego_ids(g)
        for ego in egos:
            g.index_of(ego)
        args = [(ego, cfg.graphs, cfg.reduce, cfg.min_size, cfg.policy) for ego in sorted(set(egos))]
        outcomes = _map(_worker_ego_features, args, cfg.jobs, initializer=_set_worker_graph, initargs=(g,))
        tables: Dict[str, List[FeatureRow]] = {d.value: [] for d in cfg.graphs}
        exclusions: List[Exclusion] = []
        for outcome in outcomes:
            exclusions.extend(outcome.exclusions)
            for depth, row in outcome.rows.items():
                if row is not None:
                    tables[depth].append((outcome.ego_id, row))
        for depth, rows in tables.items():
            write_feature_csv(rows, self.features_path(depth))
        write_csv(
            self.out / "excluded.csv",
            ("user_id", "graph_type", "reason", "action"),
            ((e.user_id, e.graph_type, e.reason, e.action) for e in exclusions),
        )
        meta = [f"{name}=undirected" for name in UNDIRECTED_MEASURES]
        meta += [f"reduce={cfg.reduce}", f"min_size={cfg.min_size}", f"policy={cfg.policy.value}"]
        write_text(self.out / "features_meta.txt", "\n".join(meta) + "\n")
        logger.info(
            "features for %d ego(s): %s; %d exclusion record(s)",
            len(egos), ", ".join(f"{d}={len(r)}" for d, r in tables.items()), len(exclusions),
        )
        return tables

    def _standardized(self, depth: Depth) -> FeatureMatrix:
        return standardize_columns(read_feature_csv(self.features_path(depth)))

    def classify(self) -> GridResult:
        cfg = self.config
        labels = load_labels(self.labels_path)
        tasks: List[CellTask] = []
        for depth in cfg.graphs:
            z = self._standardized(depth)
            unlabeled = sum(1 for i in z.ids if i not in labels)
            bots = sum(1 for i in z.ids if labels.get(i) == 1)
            write_text(
                self.out / f"summary_meta_{depth.value}.txt",
                f"bots={bots}\nnots={z.n - bots - unlabeled}\nunlabeled={unlabeled}\n",
            )
            matrices: Dict[DistanceMethod, DissimilarityMatrix] = {}
            for method in dict.fromkeys(cfg.distances + cfg.image_distances):
                matrices[method] = build_dissimilarity_matrix(z, method)
            for method in cfg.image_distances:
                d = matrices[method]
                render_idm(d, vat_order(d), self.out / "idm" / f"{method.value}_{depth.value}.pgm")
            for method in cfg.distances:
                for name in cfg.clusterers:
                    tasks.append(CellTask(method.value, depth.value, name, matrices[method], cfg.k, cfg.memb_exp))
        logger.info("classifying %d grid cell(s) with %d job(s)", len(tasks), cfg.jobs)
        reports: List[PerformanceReport] = []
        failures: List[CellFailure] = []
        for task, result in _map(run_cell, tasks, cfg.jobs):
            if isinstance(result, str):
                logger.warning("cell %s/%s/%s failed: %s", task.distance, task.graph_type, task.clusterer, result)
                failures.append(CellFailure(task.distance, task.graph_type, task.clusterer, result))
                continue
            write_assignment_csv(result, self.out / "assignments" / f"{task.distance}_{task.graph_type}_{task.clusterer}.csv")
            oriented = align_clusters(result, labels)
            table = confusion(oriented, labels)
            key = MethodKey(task.distance, task.graph_type, task.clusterer)
            reports.append(PerformanceReport(key, oriented.flipped, table, performance(table)))
        write_results_csv(reports, self.out / "results.csv")
        write_roc_csv(roc_table(reports), self.out / "roc.csv")
        write_summary_csv(reports, self.out / "summary.csv")
        write_csv(self.out / "failures.csv", FAILURES_HEADER, ((f.distance, f.graph_type, f.clusterer, f.error) for f in failures))
        return GridResult(tuple(reports), tuple(failures))

    def validate(self, features: Optional[Path] = None) -> ValidationReport:
        cfg = self.config
        f = read_feature_csv(features or self.features_path(cfg.graphs[0]))
        report = select_methods(
            f,
            cfg.sample_fraction,
            cfg.seed,
            methods=cfg.clusterers,
            distance_method=cfg.validation_distance,
            nn=cfg.nn,
            memb_exp=cfg.memb_exp,
        )
        write_validation_csv(report, self.out / "validation.csv")
        write_optimal_csv(report, self.out / "validation_optimal.csv")
        return report

    def run(self) -> GridResult:
        """All stages; generates a synthetic dataset when no edge list is configured."""

        if self.config.edges is None:
            self.generate()
        self.features()
        result = self.classify()
        self.validate()
        return result

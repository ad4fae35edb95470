from .confusion import BOT, NOT, ConfusionTable, OrientedAssignment, align_clusters, confusion
from .performance import (
    DIAGONAL,
    METRICS,
    Metrics,
    MethodKey,
    PerformanceReport,
    RocPoint,
    performance,
    roc_table,
    summarize,
    write_results_csv,
    write_roc_csv,
    write_summary_csv,
)

__all__ = [
    "BOT",
    "NOT",
    "ConfusionTable",
    "OrientedAssignment",
    "align_clusters",
    "confusion",
    "DIAGONAL",
    "METRICS",
    "Metrics",
    "MethodKey",
    "PerformanceReport",
    "RocPoint",
    "performance",
    "roc_table",
    "summarize",
    "write_results_csv",
    "write_roc_csv",
    "write_summary_csv",
]

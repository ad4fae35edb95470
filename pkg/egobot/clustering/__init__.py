from .agnes import Dendrogram, Merge, agnes, cut_dendrogram
from .base import ClusterAssignment, Clusterer
from .fanny import FannyResult, MembershipMatrix, fanny, fanny_objective
from .methods import CLUSTERER_NAMES, clusterer
from .pam import pam, pam_objective
from .selection import ValidationReport, ValidationRow, select_methods, write_optimal_csv, write_validation_csv
from .validation import InternalScores, StabilityScores, internal_validation, stability_validation

__all__ = [
    "CLUSTERER_NAMES",
    "ClusterAssignment",
    "Clusterer",
    "Dendrogram",
    "FannyResult",
    "InternalScores",
    "MembershipMatrix",
    "Merge",
    "StabilityScores",
    "ValidationReport",
    "ValidationRow",
    "agnes",
    "clusterer",
    "cut_dendrogram",
    "fanny",
    "fanny_objective",
    "internal_validation",
    "pam",
    "pam_objective",
    "select_methods",
    "stability_validation",
    "write_optimal_csv",
    "write_validation_csv",
]

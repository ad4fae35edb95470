from .structural import (
    DegreeMode,
    articulation_point_count,
    articulation_points,
    degree_assortativity,
    density,
    ego_degree_centrality,
    global_clustering_coefficient,
    graph_centralization,
    local_clustering_coefficient,
    reciprocity,
)
from .vector import CSV_HEADER, MEASURE_COLUMNS, FeatureVector, compute_feature_vector, impute_degenerate

__all__ = [
    "DegreeMode",
    "articulation_point_count",
    "articulation_points",
    "degree_assortativity",
    "density",
    "ego_degree_centrality",
    "global_clustering_coefficient",
    "graph_centralization",
    "local_clustering_coefficient",
    "reciprocity",
    "CSV_HEADER",
    "MEASURE_COLUMNS",
    "FeatureVector",
    "compute_feature_vector",
    "impute_degenerate",
]

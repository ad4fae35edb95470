"""egobot public API.

Expose the Pipeline facade and key types. Internals live under egobot.core,
egobot.measures, egobot.dissimilarity, egobot.clustering, egobot.evaluation
and egobot.synthgen.
"""
from .api import Pipeline  # noqa: F401
from .config import PipelineConfig, load_config  # noqa: F401
from .core.ego import Depth, EgoNetwork, extract_k2_ego_network, reduce_to_k1  # noqa: F401
from .core.graph import DirectedGraph, load_edge_list, load_labels  # noqa: F401
from .core.undefined import UNDEFINED, DegeneratePolicy  # noqa: F401
from .synthgen.config import GeneratorConfig  # noqa: F401

__all__ = [
    "Pipeline",
    "PipelineConfig",
    "load_config",
    "Depth",
    "EgoNetwork",
    "extract_k2_ego_network",
    "reduce_to_k1",
    "DirectedGraph",
    "load_edge_list",
    "load_labels",
    "UNDEFINED",
    "DegeneratePolicy",
    "GeneratorConfig",
]

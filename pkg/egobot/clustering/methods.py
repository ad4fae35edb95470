from __future__ import annotations
from functools import partial
from typing import Dict, Tuple

from ..core.errors import ConfigError
from ..dissimilarity.metrics import DissimilarityMatrix
from .agnes import agnes, cut_dendrogram
from .base import ClusterAssignment, Clusterer
from .fanny import fanny
from .pam import pam

CLUSTERER_NAMES: Tuple[str, ...] = ("pam", "fanny", "agnes")


def pam_assign(d: DissimilarityMatrix, k: int) -> ClusterAssignment:
    return pam(d, k)


def fanny_assign(d: DissimilarityMatrix, k: int, memb_exp: float = 2.0) -> ClusterAssignment:
    return fanny(d, k, memb_exp=memb_exp).assignment


def agnes_assign(d: DissimilarityMatrix, k: int) -> ClusterAssignment:
    return cut_dendrogram(agnes(d), k)


def clusterer(name: str, *, memb_exp: float = 2.0) -> Clusterer:
    """Look up a crisp clusterer by name."""

    table: Dict[str, Clusterer] = {
        "pam": pam_assign,
        "fanny": partial(fanny_assign, memb_exp=memb_exp),
        "agnes": agnes_assign,
    }
    try:
        return table[name]
    except KeyError:
        raise ConfigError(f"Unknown clusterer '{name}', expected one of {', '.join(CLUSTERER_NAMES)}") from None

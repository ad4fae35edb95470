from __future__ import annotations
from dataclasses import asdict, dataclass
from typing import Callable, List, Tuple

from ..core.ego import EgoNetwork
from ..core.errors import DegenerateEgoError, UndefinedMeasureError
from ..core.undefined import MaybeFloat, is_undefined, or_default
from . import structural as st

# CSV column names, in FeatureVector field order
MEASURE_COLUMNS: Tuple[str, ...] = (
    "size",
    "density",
    "gcc",
    "lcc",
    "centr_in",
    "centr_out",
    "centr_total",
    "deg_in",
    "deg_out",
    "deg_total",
    "reciprocity",
    "assortativity",
    "articulation",
)
FLAG_COLUMN = "assort_undef"
CSV_HEADER: Tuple[str, ...] = ("user_id",) + MEASURE_COLUMNS + (FLAG_COLUMN,)

MIN_SIZE = 3


@dataclass(frozen=True, slots=True)
class FeatureVector:
    """The thirteen topology measures of one ego network."""

    size: int
    density: float
    global_clustering: float
    local_clustering_ego: float
    centralization_in: float
    centralization_out: float
    centralization_total: float
    ego_indegree: int
    ego_outdegree: int
    ego_degree: int
    reciprocity: float
    assortativity: MaybeFloat
    articulation_points: int

    @property
    def assortativity_undefined(self) -> bool:
        return is_undefined(self.assortativity)

    def values(self) -> List[MaybeFloat]:
        return list(asdict(self).values())

    def as_row(self) -> List[float]:
        """Measures plus the imputation flag; undefined assortativity -> 0."""

        row: List[float] = [float(x) for x in self.values()[:11]]
        row.append(or_default(self.assortativity, 0.0))
        row.append(float(self.articulation_points))
        row.append(1.0 if self.assortativity_undefined else 0.0)
        return row


def compute_feature_vector(net: EgoNetwork, *, min_size: int = MIN_SIZE) -> FeatureVector:
    """All thirteen measures; raises :class:`DegenerateEgoError` below ``min_size``."""

    if net.n < max(min_size, MIN_SIZE):
        raise DegenerateEgoError(net.ego_id, net.n, max(min_size, MIN_SIZE))
    return _vector(net, strict=True)


def impute_degenerate(net: EgoNetwork) -> FeatureVector:
    """Feature vector for a too-small network with undefined measures set to 0."""

    return _vector(net, strict=False)


def _measure(fn: Callable[[], float], strict: bool) -> float:
    try:
        return fn()
    except UndefinedMeasureError:
        if strict:
            raise
        return 0.0


def _vector(net: EgoNetwork, *, strict: bool) -> FeatureVector:
    deg_in = st.ego_degree_centrality(net, mode=st.DegreeMode.IN)
    deg_out = st.ego_degree_centrality(net, mode=st.DegreeMode.OUT)
    return FeatureVector(
        size=net.n,
        density=_measure(lambda: st.density(net), strict),
        global_clustering=st.global_clustering_coefficient(net),
        local_clustering_ego=st.local_clustering_coefficient(net),
        centralization_in=_measure(lambda: st.graph_centralization(net, st.DegreeMode.IN), strict),
        centralization_out=_measure(lambda: st.graph_centralization(net, st.DegreeMode.OUT), strict),
        centralization_total=_measure(lambda: st.graph_centralization(net, st.DegreeMode.TOTAL), strict),
        ego_indegree=deg_in,
        ego_outdegree=deg_out,
        ego_degree=deg_in + deg_out,
        # an ego network with >= 3 nodes always has an edge
        reciprocity=_measure(lambda: st.reciprocity(net), strict),
        assortativity=st.degree_assortativity(net),
        articulation_points=st.articulation_point_count(net),
    )

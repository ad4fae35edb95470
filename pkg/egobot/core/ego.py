from __future__ import annotations
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Optional

from .graph import DirectedGraph, k_core_decomposition


class Depth(str, Enum):
    """Crawl depth of an ego network."""

    K2 = "k2"
    K1 = "k1"


@dataclass(frozen=True, slots=True)
class EgoNetwork:
    """An ego's crawled neighbourhood.

    ``expanded`` holds the (local) nodes whose complete friend lists were
    observed; only they contribute out-edges.
    """

    graph: DirectedGraph
    ego: int
    depth: Depth
    expanded: FrozenSet[int]

    @property
    def ego_id(self) -> str:
        return self.graph.node_ids[self.ego]

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m


def extract_k2_ego_network(g: DirectedGraph, ego: str | int) -> EgoNetwork:
    """Two friend-steps around ``ego`` as a friends-only crawler sees them.

    Nodes are the ego, its friends and their friends. Edges come only from
    the ego and its friends; a second-level node's own friends are never
    fetched, so edges among second-level nodes are not observed.
    """

    e = g.index_of(ego) if isinstance(ego, str) else ego
    level1 = set(g.out_adj[e])
    expanded = level1 | {e}
    nodes = set(expanded)
    for u in level1:
        nodes.update(g.out_adj[u])
    sub, remap = g.subgraph(nodes, sources=expanded)
    return EgoNetwork(sub, remap[e], Depth.K2, frozenset(remap[u] for u in expanded))


def reduce_to_k1(k2: EgoNetwork) -> EgoNetwork:
    """Induced subgraph on the ego's closed friend neighbourhood."""

    if k2.depth is not Depth.K2:
        raise ValueError(f"reduce_to_k1 expects a K2 network, got {k2.depth.value}")
    g = k2.graph
    keep = set(g.out_adj[k2.ego]) | {k2.ego}
    sub, remap = g.subgraph(keep)
    return EgoNetwork(sub, remap[k2.ego], Depth.K1, frozenset(remap.values()))


def reduce_to_kcore(k2: EgoNetwork, k: Optional[int] = None) -> EgoNetwork:
    """K1 by k-core decomposition: the ego plus the k-core of the K2 network.

    With ``k=None`` the main core is kept, i.e. the innermost non-empty core
    of the K2 projection.
    """

    if k2.depth is not Depth.K2:
        raise ValueError(f"reduce_to_kcore expects a K2 network, got {k2.depth.value}")
    if k is not None and k < 1:
        raise ValueError(f"k-core order must be >= 1, got {k}")
    cores = k_core_decomposition(k2.graph)
    if k is None:
        k = max(cores.values(), default=0)
    keep = {v for v, c in cores.items() if c >= k} | {k2.ego}
    sub, remap = k2.graph.subgraph(keep)
    expanded = frozenset(remap[u] for u in k2.expanded if u in remap)
    return EgoNetwork(sub, remap[k2.ego], Depth.K1, expanded)

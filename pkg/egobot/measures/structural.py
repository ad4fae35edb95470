"""Topology measures of a single ego network.

Clustering, assortativity and articulation points are computed on the
undirected projection; density, centralities, centralization and
reciprocity on the directed graph.
"""
from __future__ import annotations
from enum import Enum
from typing import List, Union

from ..core.ego import EgoNetwork
from ..core.errors import UndefinedMeasureError
from ..core.graph import DirectedGraph, UndirectedGraph, undirected_projection
from ..core.undefined import UNDEFINED, MaybeFloat

GraphLike = Union[EgoNetwork, DirectedGraph]


class DegreeMode(str, Enum):
    IN = "in"
    OUT = "out"
    TOTAL = "total"


def _digraph(net: GraphLike) -> DirectedGraph:
    return net.graph if isinstance(net, EgoNetwork) else net


def _undirected(net: GraphLike) -> UndirectedGraph:
    return undirected_projection(_digraph(net))


def _links_among_neighbours(und: UndirectedGraph, v: int) -> int:
    nbrs = und.adj[v]
    nbr_set = set(nbrs)
    count = 0
    for u in nbrs:
        count += sum(1 for w in und.adj[u] if w in nbr_set and w > u)
    return count


def density(net: GraphLike) -> float:
    g = _digraph(net)
    if g.n < 2:
        raise UndefinedMeasureError(f"density needs >= 2 nodes, got {g.n}")
    return g.m / (g.n * (g.n - 1))


def global_clustering_coefficient(net: GraphLike) -> float:
    """3 x triangles / connected triples; 0 without any triple."""

    und = _undirected(net)
    closed = 0
    triples = 0
    for v in range(und.n):
        d = und.degree(v)
        triples += d * (d - 1) // 2
        closed += _links_among_neighbours(und, v)
    # each triangle is seen once from each of its three corners
    return closed / triples if triples else 0.0


def local_clustering_coefficient(net: GraphLike, v: int | None = None) -> float:
    if v is None:
        if not isinstance(net, EgoNetwork):
            raise ValueError("a focal node is required for a bare graph")
        v = net.ego
    und = _undirected(net)
    d = und.degree(v)
    if d < 2:
        return 0.0
    return _links_among_neighbours(und, v) / (d * (d - 1) / 2)


def _degrees(g: DirectedGraph, mode: DegreeMode) -> List[int]:
    mode = DegreeMode(mode)
    if mode is DegreeMode.IN:
        return [len(a) for a in g.in_adj]
    if mode is DegreeMode.OUT:
        return [len(a) for a in g.out_adj]
    return [len(a) + len(b) for a, b in zip(g.in_adj, g.out_adj)]


def ego_degree_centrality(net: GraphLike, v: int | None = None, mode: DegreeMode | str = DegreeMode.TOTAL) -> int:
    g = _digraph(net)
    if v is None:
        if not isinstance(net, EgoNetwork):
            raise ValueError("a focal node is required for a bare graph")
        v = net.ego
    mode = DegreeMode(mode)
    if mode is DegreeMode.IN:
        return len(g.in_adj[v])
    if mode is DegreeMode.OUT:
        return len(g.out_adj[v])
    return len(g.in_adj[v]) + len(g.out_adj[v])


def graph_centralization(net: GraphLike, mode: DegreeMode | str = DegreeMode.TOTAL) -> float:
    """Freeman centralization, scaled so a pure out-star scores 1."""

    g = _digraph(net)
    n = g.n
    if n < 3:
        raise UndefinedMeasureError(f"centralization needs >= 3 nodes, got {n}")
    mode = DegreeMode(mode)
    degs = _degrees(g, mode)
    cap = 2 * (n - 1) if mode is DegreeMode.TOTAL else n - 1
    top = max(degs)
    return sum(top - c for c in degs) / ((n - 1) * cap)


def reciprocity(net: GraphLike) -> float:
    g = _digraph(net)
    m = g.m
    if m == 0:
        raise UndefinedMeasureError("reciprocity needs at least one edge")
    mutual = sum(1 for u, v in g.edges() if g.has_edge(v, u))
    return mutual / m


def degree_assortativity(net: GraphLike) -> MaybeFloat:
    """Pearson correlation of endpoint degrees over undirected edges.

    Returns ``UNDEFINED`` when there is no edge or every endpoint degree is
    equal.
    """

    und = _undirected(net)
    edges = und.edges()
    if not edges:
        return UNDEFINED
    deg = [und.degree(v) for v in range(und.n)]
    # each edge contributes both orientations, so both margins are equal
    xs = [deg[u] for u, v in edges] + [deg[v] for u, v in edges]
    ys = [deg[v] for u, v in edges] + [deg[u] for u, v in edges]
    count = len(xs)
    sx = sum(xs)
    sxx = sum(x * x for x in xs)
    sxy = sum(x * y for x, y in zip(xs, ys))
    var = count * sxx - sx * sx
    if var == 0:
        return UNDEFINED
    r = (count * sxy - sx * sx) / var
    return max(-1.0, min(1.0, r))


def articulation_points(net: GraphLike) -> List[int]:
    """Cut vertices of the undirected projection (iterative lowlink DFS)."""

    und = _undirected(net)
    n = und.n
    disc = [-1] * n
    low = [0] * n
    is_cut = [False] * n
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(und.adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(und.adj[w])))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    is_cut[parent] = True
        if root_children > 1:
            is_cut[root] = True
    return [v for v in range(n) if is_cut[v]]


def articulation_point_count(net: GraphLike) -> int:
    return len(articulation_points(net))

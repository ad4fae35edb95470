from __future__ import annotations
import csv
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from .errors import EdgeListError, UnknownNodeError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
Adjacency = Tuple[Tuple[int, ...], ...]

_HEADER = ("source", "target")


@dataclass(frozen=True, slots=True)
class DirectedGraph:
    """Immutable simple digraph over dense indices with opaque string ids.

    ``out_adj[u]`` holds the friends of ``u`` (accounts it follows),
    ``in_adj[u]`` its followers. Both are sorted tuples.
    """

    node_ids: Tuple[str, ...]
    out_adj: Adjacency
    in_adj: Adjacency
    _index: Dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.node_ids:
            raise ValueError("A graph needs at least one node")
        object.__setattr__(self, "_index", {nid: i for i, nid in enumerate(self.node_ids)})
        if len(self._index) != len(self.node_ids):
            raise ValueError("Duplicate node ids")

    @classmethod
    def from_edges(cls, node_ids: Sequence[str], edges: Iterable[Edge]) -> DirectedGraph:
        """Build from index pairs; duplicates and self-loops are ignored."""

        n = len(node_ids)
        outs: List[set] = [set() for _ in range(n)]
        ins: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                continue
            outs[u].add(v)
            ins[v].add(u)
        return cls(
            tuple(node_ids),
            tuple(tuple(sorted(s)) for s in outs),
            tuple(tuple(sorted(s)) for s in ins),
        )

    @classmethod
    def from_id_edges(cls, pairs: Iterable[Tuple[str, str]], extra_ids: Iterable[str] = ()) -> DirectedGraph:
        ids: Dict[str, int] = {}
        edges: List[Edge] = []
        for src, dst in pairs:
            u = ids.setdefault(src, len(ids))
            v = ids.setdefault(dst, len(ids))
            edges.append((u, v))
        for nid in extra_ids:
            ids.setdefault(nid, len(ids))
        return cls.from_edges(list(ids), edges)

    # ----- size -----
    @property
    def n(self) -> int:
        return len(self.node_ids)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.out_adj)

    # ----- lookup -----
    def index_of(self, node_id: str) -> int:
        try:
            return self._index[node_id]
        except KeyError:
            raise UnknownNodeError(node_id) from None

    def __contains__(self, node_id: object) -> bool:
        return node_id in self._index

    def edges(self) -> List[Edge]:
        return [(u, v) for u, succ in enumerate(self.out_adj) for v in succ]

    def id_edges(self) -> List[Tuple[str, str]]:
        ids = self.node_ids
        return [(ids[u], ids[v]) for u, v in self.edges()]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.out_adj[u]

    # ----- derived graphs -----
    def subgraph(self, nodes: Iterable[int], sources: Iterable[int] | None = None) -> Tuple[DirectedGraph, Dict[int, int]]:
        """Subgraph on ``nodes`` keeping edges whose source is in ``sources``.

        With ``sources=None`` this is the induced subgraph. Nodes keep their
        relative order. Returns the graph and the old -> new index map.
        """

        keep = sorted(set(nodes))
        remap = {old: new for new, old in enumerate(keep)}
        allowed = remap.keys() if sources is None else set(sources) & remap.keys()
        edges = [
            (remap[u], remap[v])
            for u in sorted(allowed)
            for v in self.out_adj[u]
            if v in remap
        ]
        sub = DirectedGraph.from_edges([self.node_ids[i] for i in keep], edges)
        return sub, remap


@dataclass(frozen=True, slots=True)
class UndirectedGraph:
    """Simple undirected graph: ``adj[u]`` is the sorted neighbour tuple."""

    adj: Adjacency

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> List[Edge]:
        return [(u, v) for u, nbrs in enumerate(self.adj) for v in nbrs if u < v]


def undirected_projection(g: DirectedGraph) -> UndirectedGraph:
    """Edge {u, v} exists iff (u, v) or (v, u) is an edge of ``g``."""

    merged = []
    for u in range(g.n):
        merged.append(tuple(sorted(set(g.out_adj[u]).union(g.in_adj[u]))))
    return UndirectedGraph(tuple(merged))


def k_core_decomposition(g: DirectedGraph | UndirectedGraph) -> Dict[int, int]:
    """Core number of every node of the undirected projection.

    Bucket-ordered minimum-degree peeling (Batagelj & Zaversnik), O(n + m).
    """

    und = g if isinstance(g, UndirectedGraph) else undirected_projection(g)
    n = und.n
    deg = [len(a) for a in und.adj]
    max_deg = max(deg, default=0)
    bins = [0] * (max_deg + 1)
    for d in deg:
        bins[d] += 1
    start = 0
    for d in range(max_deg + 1):
        bins[d], start = start, start + bins[d]
    pos = [0] * n
    order = [0] * n
    for v in range(n):
        pos[v] = bins[deg[v]]
        order[pos[v]] = v
        bins[deg[v]] += 1
    for d in range(max_deg, 0, -1):
        bins[d] = bins[d - 1]
    if bins:
        bins[0] = 0
    for i in range(n):
        v = order[i]
        for u in und.adj[v]:
            if deg[u] > deg[v]:
                du = deg[u]
                pu = pos[u]
                pw = bins[du]
                w = order[pw]
                if u != w:
                    pos[u], pos[w] = pw, pu
                    order[pu], order[pw] = w, u
                bins[du] += 1
                deg[u] -= 1
    return {v: deg[v] for v in range(n)}


# ----- edge-list / labels CSV -----

def _rows(path: Path, header: Tuple[str, ...] = ()) -> Iterator[Tuple[int, List[str]]]:
    """Non-blank rows with stripped cells; ``header`` is skipped if it is the first one."""

    first = True
    try:
        with path.open(newline="", encoding="utf-8-sig") as fh:
            for lineno, row in enumerate(csv.reader(fh), start=1):
                if not row or all(not cell.strip() for cell in row):
                    continue
                cells = [cell.strip() for cell in row]
                if first:
                    first = False
                    if header and tuple(c.lower() for c in cells) == header:
                        continue
                yield lineno, cells
    except UnicodeDecodeError as exc:
        raise EdgeListError(f"not UTF-8 text ({exc.reason} at byte {exc.start})", path=str(path)) from None


@dataclass(frozen=True, slots=True)
class IngestReport:
    lines: int
    duplicates: int
    self_loops: int


def load_edge_list(path: str | Path) -> DirectedGraph:
    return read_edge_list(path)[0]


def read_edge_list(path: str | Path) -> Tuple[DirectedGraph, IngestReport]:
    """Read ``source,target`` lines into a simple digraph.

    Duplicate edges collapse and self-loops are dropped (their endpoint is
    still a node); both are counted in the report and logged.
    """

    path = Path(path)
    pairs: List[Tuple[str, str]] = []
    loops: List[str] = []
    seen = set()
    duplicates = 0
    lines = 0
    for lineno, row in _rows(path, _HEADER):
        lines += 1
        if len(row) != 2 or not row[0] or not row[1]:
            raise EdgeListError(f"expected 'source,target', got {','.join(row)!r}", path=str(path), line=lineno)
        src, dst = row
        if src == dst:
            loops.append(src)
            continue
        if (src, dst) in seen:
            duplicates += 1
            continue
        seen.add((src, dst))
        pairs.append((src, dst))
    if not pairs and not loops:
        raise EdgeListError("edge list is empty", path=str(path))
    g = DirectedGraph.from_id_edges(pairs, extra_ids=loops)
    if loops:
        logger.warning("%s: dropped %d self-loop(s)", path, len(loops))
    if duplicates:
        logger.warning("%s: collapsed %d duplicate edge(s)", path, duplicates)
    logger.info("%s: loaded %d nodes, %d edges", path, g.n, g.m)
    return g, IngestReport(lines=lines, duplicates=duplicates, self_loops=len(loops))


def edge_list_lines(g: DirectedGraph) -> List[List[str]]:
    return [list(_HEADER)] + [[s, t] for s, t in g.id_edges()]


def load_labels(path: str | Path) -> Dict[str, int]:
    """Read ``user_id,label`` with label 1 = bot, 0 = not."""

    path = Path(path)
    labels: Dict[str, int] = {}
    for lineno, row in _rows(path, ("user_id", "label")):
        if len(row) != 2 or row[1] not in ("0", "1"):
            raise EdgeListError(f"expected 'user_id,label' with label 0 or 1, got {','.join(row)!r}", path=str(path), line=lineno)
        labels[row[0]] = int(row[1])
    if not labels:
        raise EdgeListError("labels file is empty", path=str(path))
    return labels


def load_ego_ids(path: str | Path) -> List[str]:
    """One ego id per line (first CSV column); an optional ``user_id`` header is skipped."""

    path = Path(path)
    ids: List[str] = []
    for lineno, row in _rows(path):
        if not row[0]:
            raise EdgeListError(f"empty ego id in {','.join(row)!r}", path=str(path), line=lineno)
        if not ids and row[0].lower() == "user_id":
            continue
        ids.append(row[0])
    if not ids:
        raise EdgeListError("ego list is empty", path=str(path))
    return ids

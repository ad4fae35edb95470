import random
import tempfile
import unittest
from pathlib import Path

import networkx as nx

from egobot.core.ego import Depth, EgoNetwork, extract_k2_ego_network, reduce_to_k1, reduce_to_kcore
from egobot.core.errors import ConfigError, EdgeListError, UnknownNodeError
from egobot.core.graph import (
    DirectedGraph,
    k_core_decomposition,
    load_edge_list,
    load_ego_ids,
    load_labels,
    read_edge_list,
    undirected_projection,
)
from egobot.operators import reduce
from egobot.ops.serialize import write_edge_list, write_labels


def random_digraph(seed: int, n: int, p: float) -> DirectedGraph:
    rng = random.Random(seed)
    ids = [f"n{i}" for i in range(n)]
    edges = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    return DirectedGraph.from_edges(ids, edges)


def id_edge_set(g: DirectedGraph) -> set:
    return set(g.id_edges())


class TempDirMixin:
    def setUp(self) -> None:
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self) -> None:
        self._tmp.cleanup()

    def write(self, name: str, text: str) -> Path:
        path = self.tmp / name
        path.write_text(text, encoding="utf-8")
        return path


class EdgeListLoadingTests(TempDirMixin, unittest.TestCase):
    def test_two_edges(self) -> None:
        g = load_edge_list(self.write("e.csv", "a,b\nb,c\n"))
        self.assertEqual((g.n, g.m), (3, 2))
        self.assertEqual(id_edge_set(g), {("a", "b"), ("b", "c")})

    def test_duplicate_is_collapsed_and_reported(self) -> None:
        g, report = read_edge_list(self.write("e.csv", "a,b\na,b\n"))
        self.assertEqual((g.n, g.m), (2, 1))
        self.assertEqual(report.duplicates, 1)

    def test_self_loop_is_dropped_but_node_kept(self) -> None:
        with self.assertLogs("egobot.core.graph", level="WARNING"):
            g, report = read_edge_list(self.write("e.csv", "a,a\n"))
        self.assertEqual((g.n, g.m), (1, 0))
        self.assertEqual(report.self_loops, 1)

    def test_header_and_blank_lines(self) -> None:
        g = load_edge_list(self.write("e.csv", "source,target\n\na,b\n"))
        self.assertEqual(id_edge_set(g), {("a", "b")})

    def test_header_after_leading_blank_lines(self) -> None:
        g = load_edge_list(self.write("e.csv", "\n  ,  \nSource,Target\na,b\n"))
        self.assertEqual(set(g.node_ids), {"a", "b"})

    def test_byte_order_mark_before_header(self) -> None:
        path = self.tmp / "e.csv"
        path.write_text("source,target\na,b\n", encoding="utf-8-sig")
        g = load_edge_list(path)
        self.assertEqual(id_edge_set(g), {("a", "b")})
        self.assertNotIn("\ufeffsource", g.node_ids)

    def test_header_is_only_skipped_as_first_row(self) -> None:
        g = load_edge_list(self.write("e.csv", "a,b\nsource,target\n"))
        self.assertEqual(id_edge_set(g), {("a", "b"), ("source", "target")})

    def test_undecodable_bytes(self) -> None:
        path = self.tmp / "e.csv"
        path.write_bytes(b"\xff\xfe,c\n")
        with self.assertRaises(EdgeListError) as ctx:
            load_edge_list(path)
        self.assertIn("not UTF-8", str(ctx.exception))

    def test_malformed_line_names_line_number(self) -> None:
        with self.assertRaises(EdgeListError) as ctx:
            load_edge_list(self.write("e.csv", "a,b\nb,c,d\n"))
        self.assertEqual(ctx.exception.line, 2)
        self.assertIn(":2:", str(ctx.exception))

    def test_empty_file(self) -> None:
        with self.assertRaises(EdgeListError):
            load_edge_list(self.write("e.csv", ""))

    def test_round_trip_keeps_ids_and_edges(self) -> None:
        rng = random.Random(3)
        pairs = [(f"u{rng.randrange(15)}", f"u{rng.randrange(15)}") for _ in range(40)]
        g = DirectedGraph.from_id_edges([(a, b) for a, b in pairs if a != b])
        path = write_edge_list(g, self.tmp / "out" / "edges.csv")
        again = load_edge_list(path)
        self.assertEqual(set(again.node_ids), set(g.node_ids))
        self.assertEqual(id_edge_set(again), id_edge_set(g))


class LabelsAndEgoListTests(TempDirMixin, unittest.TestCase):
    def test_labels_round_trip(self) -> None:
        path = write_labels({"b": 1, "a": 0}, self.tmp / "labels.csv")
        self.assertEqual(path.read_text(encoding="utf-8"), "user_id,label\na,0\nb,1\n")
        self.assertEqual(load_labels(path), {"a": 0, "b": 1})

    def test_bad_label_value(self) -> None:
        with self.assertRaises(EdgeListError) as ctx:
            load_labels(self.write("l.csv", "user_id,label\na,1\nb,2\n"))
        self.assertEqual(ctx.exception.line, 3)

    def test_labels_with_bom_and_leading_blank_line(self) -> None:
        path = self.tmp / "l.csv"
        path.write_text("\nuser_id,label\na,1\n", encoding="utf-8-sig")
        self.assertEqual(load_labels(path), {"a": 1})

    def test_ego_list_skips_header(self) -> None:
        self.assertEqual(load_ego_ids(self.write("egos.txt", "user_id\nx\ny\n")), ["x", "y"])


class GraphInvariantTests(unittest.TestCase):
    def test_adjacency_is_consistent_and_simple(self) -> None:
        g = DirectedGraph.from_edges(["a", "b", "c"], [(0, 1), (0, 1), (1, 1), (2, 0)])
        self.assertEqual(g.m, 2)
        for u, succ in enumerate(g.out_adj):
            self.assertNotIn(u, succ)
            for v in succ:
                self.assertIn(u, g.in_adj[v])

    def test_unknown_node(self) -> None:
        g = DirectedGraph.from_id_edges([("a", "b")])
        with self.assertRaises(UnknownNodeError) as ctx:
            extract_k2_ego_network(g, "zzz")
        self.assertIn("zzz", str(ctx.exception))
        self.assertIsInstance(ctx.exception, KeyError)


class EgoExtractionTests(unittest.TestCase):
    def test_level_two_out_edges_are_unobserved(self) -> None:
        g = DirectedGraph.from_id_edges([("ego", "a"), ("a", "b"), ("b", "c")])
        k2 = extract_k2_ego_network(g, "ego")
        self.assertEqual(set(k2.graph.node_ids), {"ego", "a", "b"})
        self.assertEqual(id_edge_set(k2.graph), {("ego", "a"), ("a", "b")})
        self.assertIs(k2.depth, Depth.K2)
        self.assertEqual(k2.ego_id, "ego")

    def test_mutual_dyad(self) -> None:
        g = DirectedGraph.from_id_edges([("ego", "a"), ("a", "ego")])
        k2 = extract_k2_ego_network(g, "ego")
        self.assertEqual(id_edge_set(k2.graph), {("ego", "a"), ("a", "ego")})

    def test_k1_is_induced_on_closed_friend_set(self) -> None:
        g = DirectedGraph.from_id_edges([("ego", "a"), ("a", "b")])
        k1 = reduce_to_k1(extract_k2_ego_network(g, "ego"))
        self.assertEqual(set(k1.graph.node_ids), {"ego", "a"})
        self.assertEqual(id_edge_set(k1.graph), {("ego", "a")})
        self.assertIs(k1.depth, Depth.K1)

    def test_k1_keeps_edges_among_friends(self) -> None:
        g = DirectedGraph.from_id_edges([("ego", "a"), ("ego", "b"), ("a", "b")])
        k1 = reduce_to_k1(extract_k2_ego_network(g, "ego"))
        self.assertIn(("a", "b"), id_edge_set(k1.graph))

    def test_friendless_ego_gives_singleton(self) -> None:
        g = DirectedGraph.from_id_edges([("a", "ego")])
        k1 = reduce_to_k1(extract_k2_ego_network(g, "ego"))
        self.assertEqual(k1.graph.node_ids, ("ego",))

    def test_k1_rejects_non_k2_input(self) -> None:
        g = DirectedGraph.from_id_edges([("ego", "a")])
        k1 = reduce_to_k1(extract_k2_ego_network(g, "ego"))
        with self.assertRaises(ValueError):
            reduce_to_k1(k1)

    def test_random_graphs_match_two_round_crawl(self) -> None:
        for seed in range(100):
            rng = random.Random(seed)
            n = rng.randint(2, 50)
            g = random_digraph(seed, n, rng.uniform(0.02, 0.3))
            ego = rng.randrange(n)
            succ = {u: set(g.out_adj[u]) for u in range(n)}
            level1 = succ[ego]
            expanded = level1 | {ego}
            nodes = set(expanded)
            for u in level1:
                nodes |= succ[u]
            want_edges = {(u, v) for u in expanded for v in succ[u] if v in nodes}

            k2 = extract_k2_ego_network(g, g.node_ids[ego])
            ids = g.node_ids
            self.assertEqual(set(k2.graph.node_ids), {ids[i] for i in nodes})
            self.assertEqual(id_edge_set(k2.graph), {(ids[u], ids[v]) for u, v in want_edges})
            self.assertEqual({k2.graph.node_ids[i] for i in k2.expanded}, {ids[i] for i in expanded})
            for u, v in k2.graph.edges():
                self.assertIn(u, k2.expanded)

            k1 = reduce_to_k1(k2)
            closed = expanded
            self.assertEqual(set(k1.graph.node_ids), {ids[i] for i in closed})
            self.assertEqual(
                id_edge_set(k1.graph),
                {(ids[u], ids[v]) for u in closed for v in succ[u] if v in closed},
            )
            self.assertLessEqual(set(k1.graph.node_ids), set(k2.graph.node_ids))
            self.assertEqual(
                {k1.graph.node_ids[v] for v in k1.graph.out_adj[k1.ego]},
                {ids[v] for v in level1},
            )


class ProjectionAndCoreTests(unittest.TestCase):
    def test_mutual_pair_projects_to_one_edge(self) -> None:
        und = undirected_projection(DirectedGraph.from_id_edges([("a", "b"), ("b", "a")]))
        self.assertEqual(und.edges(), [(0, 1)])
        und = undirected_projection(DirectedGraph.from_id_edges([("a", "b")]))
        self.assertEqual(und.m, 1)

    def test_projection_matches_dyad_union(self) -> None:
        g = random_digraph(11, 10, 0.3)
        want = {(min(u, v), max(u, v)) for u, v in g.edges()}
        self.assertEqual(set(undirected_projection(g).edges()), want)

    def test_small_cores(self) -> None:
        triangle = DirectedGraph.from_id_edges([("a", "b"), ("b", "c"), ("c", "a")])
        self.assertEqual(set(k_core_decomposition(triangle).values()), {2})
        path = DirectedGraph.from_id_edges([("a", "b"), ("b", "c")])
        self.assertEqual(set(k_core_decomposition(path).values()), {1})
        pendant = DirectedGraph.from_id_edges([("a", "b"), ("b", "c"), ("c", "a"), ("a", "d")])
        cores = k_core_decomposition(pendant)
        self.assertEqual({pendant.node_ids[v]: c for v, c in cores.items()}, {"a": 2, "b": 2, "c": 2, "d": 1})

    def test_cores_match_networkx_and_definition(self) -> None:
        for seed in range(30):
            g = random_digraph(seed, 25, 0.12)
            cores = k_core_decomposition(g)
            und = undirected_projection(g)
            ref = nx.Graph()
            ref.add_nodes_from(range(g.n))
            ref.add_edges_from(und.edges())
            self.assertEqual(cores, nx.core_number(ref))
            for c in set(cores.values()):
                members = {v for v, k in cores.items() if k >= c}
                for v in members:
                    self.assertGreaterEqual(sum(1 for w in und.adj[v] if w in members), c)

    def test_kcore_reduction(self) -> None:
        g = DirectedGraph.from_id_edges([("ego", "a"), ("ego", "b"), ("a", "b"), ("b", "ego"), ("a", "c")])
        k2 = extract_k2_ego_network(g, "ego")
        reduced = reduce_to_kcore(k2, 2)
        self.assertEqual(set(reduced.graph.node_ids), {"ego", "a", "b"})
        self.assertIs(reduced.depth, Depth.K1)
        self.assertEqual(reduced.ego_id, "ego")

    def test_main_core_reduction_keeps_innermost_core_and_ego(self) -> None:
        clique = [(u, v) for u in "abcd" for v in "abcd" if u != v]
        g = DirectedGraph.from_id_edges([("ego", v) for v in "abcde"] + clique + [("e", "f")])
        k2 = extract_k2_ego_network(g, "ego")
        reduced = reduce_to_kcore(k2)
        self.assertEqual(set(reduced.graph.node_ids), {"ego", "a", "b", "c", "d"})
        self.assertEqual(reduced.ego_id, "ego")
        self.assertIs(reduced.depth, Depth.K1)
        self.assertEqual(reduced.graph.node_ids, reduce_to_kcore(k2, 4).graph.node_ids)

    def test_main_core_of_a_path_keeps_everything(self) -> None:
        # friends of friends are not expanded, so d->a never enters the K2
        g = DirectedGraph.from_id_edges([("ego", "e"), ("e", "d"), ("e", "f"), ("d", "a")])
        k2 = extract_k2_ego_network(g, "ego")
        self.assertEqual(set(k_core_decomposition(k2.graph).values()), {1})
        self.assertEqual(reduce_to_kcore(k2).graph.node_ids, k2.graph.node_ids)

    def test_main_core_of_friendless_ego(self) -> None:
        g = DirectedGraph.from_id_edges([("a", "ego")])
        reduced = reduce_to_kcore(extract_k2_ego_network(g, "ego"))
        self.assertEqual(reduced.graph.node_ids, ("ego",))


class ReducerOperatorTests(unittest.TestCase):
    def setUp(self) -> None:
        g = DirectedGraph.from_id_edges([("ego", "a"), ("ego", "b"), ("a", "b"), ("b", "ego"), ("a", "c")])
        self.k2 = extract_k2_ego_network(g, "ego")

    def test_parse_ego(self) -> None:
        op = reduce.parse("ego")
        self.assertEqual(op.name, "ego")
        self.assertEqual(op(self.k2).graph.node_ids, reduce_to_k1(self.k2).graph.node_ids)

    def test_parse_kcore(self) -> None:
        op = reduce.parse("kcore:2")
        self.assertEqual(op.name, "kcore:2")
        self.assertIsInstance(op(self.k2), EgoNetwork)

    def test_parse_bare_kcore_is_main_core(self) -> None:
        op = reduce.parse("kcore")
        self.assertEqual(op.name, "kcore")
        self.assertEqual(op(self.k2).graph.node_ids, reduce_to_kcore(self.k2).graph.node_ids)

    def test_parse_rejects_unknown(self) -> None:
        for bad in ("core", "kcore:", "kcore:x", "kcore:0", "kcore:max"):
            with self.assertRaises(ConfigError):
                reduce.parse(bad)


if __name__ == "__main__":
    unittest.main()

import itertools
import unittest

import numpy as np
from scipy.cluster.hierarchy import linkage
from scipy.spatial.distance import pdist, squareform

from egobot.clustering import (
    ClusterAssignment,
    agnes,
    clusterer,
    cut_dendrogram,
    fanny,
    fanny_objective,
    MembershipMatrix,
    pam,
    pam_objective,
)
from egobot.clustering.base import compact_labels
from egobot.core.errors import ClusteringError, ConfigError
from egobot.dissimilarity import DissimilarityMatrix


def points(values) -> DissimilarityMatrix:
    x = np.asarray(values, dtype=float)
    if x.ndim == 1:
        x = x[:, None]
    return DissimilarityMatrix.from_array(squareform(pdist(x)))


def planted(seed: int, n: int, k: int, spread: float = 0.3) -> np.ndarray:
    rng = np.random.default_rng(seed)
    centres = np.arange(k)[:, None] * 20.0 + rng.normal(0.0, 1.0, size=(k, 2))
    owner = np.arange(n) % k
    return centres[owner] + rng.normal(0.0, spread, size=(n, 2))


def random_matrix(seed: int, n: int) -> DissimilarityMatrix:
    rng = np.random.default_rng(seed)
    return DissimilarityMatrix.from_array(squareform(pdist(rng.normal(size=(n, 3)))))


def partition(a: ClusterAssignment, ids=None) -> set:
    ids = a.ids if ids is None else ids
    return {frozenset(ids[i] for i in a.members(c)) for c in range(1, a.k + 1)}


class AssignmentTests(unittest.TestCase):
    def test_labels_must_be_dense(self) -> None:
        with self.assertRaises(ValueError):
            ClusterAssignment(("a", "b"), (1, 3), "x")
        with self.assertRaises(ValueError):
            ClusterAssignment(("a", "b"), (1,), "x")

    def test_compact_labels(self) -> None:
        self.assertEqual(compact_labels([4, 0, 4, 2]), (3, 1, 3, 2))

    def test_unknown_clusterer(self) -> None:
        with self.assertRaises(ConfigError):
            clusterer("kmeans")


class PamTests(unittest.TestCase):
    def test_two_pairs(self) -> None:
        d = points([0.0, 1.0, 10.0, 11.0])
        a = pam(d, 2)
        self.assertEqual(partition(a), {frozenset({"0", "1"}), frozenset({"2", "3"})})
        best = min(pam_objective(d.d, pair) for pair in itertools.combinations(range(4), 2))
        self.assertEqual(pam_objective(d.d, a.medoids), best)

    def test_identical_points(self) -> None:
        d = DissimilarityMatrix.from_array(np.zeros((4, 4)))
        a = pam(d, 2)
        self.assertEqual(pam_objective(d.d, a.medoids), 0.0)
        self.assertEqual(a.k, 2)

    def test_single_cluster_picks_the_median(self) -> None:
        a = pam(points([0.0, 1.0, 2.0]), 1)
        self.assertEqual(a.medoids, (1,))
        self.assertEqual(a.labels, (1, 1, 1))

    def test_k_out_of_range(self) -> None:
        d = points([0.0, 1.0, 2.0])
        for k in (0, 3, 4):
            with self.assertRaises(ClusteringError):
                pam(d, k)

    def test_matches_exhaustive_medoid_search(self) -> None:
        for seed in range(50):
            rng = np.random.default_rng(seed)
            k = int(rng.integers(2, 4))
            n = int(rng.integers(k + 3, 11))
            d = DissimilarityMatrix.from_array(squareform(pdist(planted(seed, n, k))))
            a = pam(d, k)
            best = min(pam_objective(d.d, c) for c in itertools.combinations(range(n), k))
            self.assertAlmostEqual(pam_objective(d.d, a.medoids), best, delta=1e-9)

    def test_no_single_swap_improves(self) -> None:
        for seed in range(20):
            d = random_matrix(seed, 15)
            k = 2 + seed % 3
            medoids = list(pam(d, k).medoids)
            cost = pam_objective(d.d, medoids)
            for pos in range(k):
                for h in range(d.n):
                    if h in medoids:
                        continue
                    trial = medoids[:pos] + [h] + medoids[pos + 1:]
                    self.assertGreaterEqual(pam_objective(d.d, trial), cost)

    def test_nearest_medoid_assignment(self) -> None:
        d = random_matrix(4, 12)
        a = pam(d, 3)
        for i, label in enumerate(a.labels):
            own = d.d[i, a.medoids[label - 1]]
            self.assertEqual(own, min(d.d[i, m] for m in a.medoids))


class FannyTests(unittest.TestCase):
    def test_rows_sum_to_one_and_objective_never_rises(self) -> None:
        for seed in range(10):
            d = random_matrix(seed, 14)
            result = fanny(d, 3)
            np.testing.assert_allclose(result.memberships.u.sum(axis=1), np.ones(14), atol=1e-9)
            self.assertTrue(np.all(result.memberships.u >= 0))
            trace = result.objective_trace
            for before, after in zip(trace, trace[1:]):
                self.assertLessEqual(after, before)
            self.assertAlmostEqual(result.objective, fanny_objective(d.d, result.memberships.u))

    def test_duplicated_pairs_go_crisp(self) -> None:
        d = points([0.0, 0.0, 10.0, 10.0])
        u = fanny(d, 2).memberships.u
        if u[0, 0] < 0.5:
            u = u[:, ::-1]
        np.testing.assert_allclose(u, [[1, 0], [1, 0], [0, 1], [0, 1]], atol=1e-6)

    def test_equidistant_points_stay_uniform(self) -> None:
        d = DissimilarityMatrix.from_array(np.ones((5, 5)) - np.eye(5))
        result = fanny(d, 2, init=np.full((5, 2), 0.5))
        np.testing.assert_array_equal(result.memberships.u, np.full((5, 2), 0.5))
        self.assertTrue(result.converged)

    def test_crisp_labels_follow_argmax(self) -> None:
        d = DissimilarityMatrix.from_array(squareform(pdist(planted(1, 12, 2))))
        result = fanny(d, 2)
        expected = compact_labels([int(c) for c in np.argmax(result.memberships.u, axis=1)])
        self.assertEqual(result.assignment.labels, expected)
        self.assertEqual(partition(result.assignment), partition(pam(d, 2)))

    def test_non_convergence_is_flagged(self) -> None:
        d = random_matrix(8, 12)
        with self.assertLogs("egobot.clustering.fanny", level="WARNING"):
            result = fanny(d, 3, tol=0.0, max_iter=1)
        self.assertFalse(result.converged)
        self.assertEqual(result.iterations, 1)

    def test_bad_arguments(self) -> None:
        d = random_matrix(0, 6)
        with self.assertRaises(ValueError):
            fanny(d, 2, memb_exp=1.0)
        with self.assertRaises(ClusteringError):
            fanny(d, 1)
        with self.assertRaises(ValueError):
            MembershipMatrix(np.array([[0.7, 0.7]]))


class AgnesTests(unittest.TestCase):
    def three_point(self) -> DissimilarityMatrix:
        return DissimilarityMatrix.from_array([[0, 1, 10], [1, 0, 10], [10, 10, 0]], ids=["1", "2", "3"])

    def test_hand_computed_merges(self) -> None:
        tree = agnes(self.three_point())
        self.assertEqual(tree.heights, (1.0, 10.0))
        self.assertEqual((tree.merges[0].left, tree.merges[0].right), (0, 1))
        self.assertEqual(tree.merges[-1].size, 3)

    def test_two_points(self) -> None:
        tree = agnes(DissimilarityMatrix.from_array([[0, 2.5], [2.5, 0]]))
        self.assertEqual(tree.heights, (2.5,))

    def test_single_point(self) -> None:
        with self.assertRaises(ClusteringError):
            agnes(DissimilarityMatrix.from_array([[0.0]]))

    def test_cuts(self) -> None:
        tree = agnes(self.three_point())
        self.assertEqual(cut_dendrogram(tree, 2).labels, (1, 1, 2))
        self.assertEqual(cut_dendrogram(tree, 3).labels, (1, 2, 3))
        self.assertEqual(cut_dendrogram(tree, 1).labels, (1, 1, 1))
        for k in (0, 4):
            with self.assertRaises(ClusteringError):
                cut_dendrogram(tree, k)

    def test_heights_are_monotone_and_match_average_linkage(self) -> None:
        for seed in range(100):
            d = random_matrix(seed, 4 + seed % 12)
            tree = agnes(d)
            heights = np.array(tree.heights)
            self.assertTrue(np.all(np.diff(heights) >= 0))
            reference = linkage(squareform(d.d, checks=False), method="average")
            np.testing.assert_allclose(heights, reference[:, 2], rtol=1e-9, atol=1e-12)

    def test_linkage_matrix_shape(self) -> None:
        tree = agnes(random_matrix(1, 7))
        z = tree.to_linkage()
        self.assertEqual(z.shape, (6, 4))
        self.assertEqual(z[-1, 3], 7)

    def test_cuts_coarsen(self) -> None:
        for seed in range(20):
            tree = agnes(random_matrix(seed, 10))
            for k in range(2, 11):
                fine = cut_dendrogram(tree, k)
                coarse = cut_dendrogram(tree, k - 1)
                self.assertEqual(fine.k, k)
                for c in range(1, k + 1):
                    self.assertEqual(len({coarse.labels[i] for i in fine.members(c)}), 1)


class RelabellingInvarianceTests(unittest.TestCase):
    def test_clusterers_ignore_observation_order(self) -> None:
        x = planted(3, 12, 2, spread=2.0)
        perm = np.random.default_rng(3).permutation(12)
        ids = [f"o{i}" for i in range(12)]
        d = DissimilarityMatrix.from_array(squareform(pdist(x)), ids=ids)
        shuffled = DissimilarityMatrix.from_array(squareform(pdist(x[perm])), ids=[ids[i] for i in perm])
        for name in ("pam", "fanny", "agnes"):
            fn = clusterer(name)
            self.assertEqual(partition(fn(d, 2)), partition(fn(shuffled, 2)), name)

    def test_fanny_memberships_follow_the_permutation(self) -> None:
        x = planted(5, 10, 2, spread=3.0)
        perm = np.random.default_rng(5).permutation(10)
        u = fanny(DissimilarityMatrix.from_array(squareform(pdist(x))), 2).memberships.u
        v = fanny(DissimilarityMatrix.from_array(squareform(pdist(x[perm]))), 2).memberships.u
        moved = u[perm]
        if not np.allclose(moved, v, atol=1e-6):
            moved = moved[:, ::-1]
        np.testing.assert_allclose(moved, v, atol=1e-6)


if __name__ == "__main__":
    unittest.main()

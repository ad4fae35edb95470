import unittest

import numpy as np

from egobot.core.sampling import bernoulli, sample_without_replacement, uniforms
from egobot.synthgen import make_rng


class RawStreamTests(unittest.TestCase):
    def test_uniform_draw_is_pinned_to_the_raw_stream(self) -> None:
        got = sample_without_replacement(make_rng(7), 6, 6)
        raw = [int(x) >> 11 for x in np.random.PCG64(7).random_raw(6)]
        want = sorted(range(6), key=lambda i: (-raw[i], i))
        self.assertEqual(list(got), want)

    def test_one_raw_word_per_candidate(self) -> None:
        rng = make_rng(11)
        sample_without_replacement(rng, 9, 3, np.arange(1.0, 10.0))
        bernoulli(rng, 0.5)
        self.assertEqual(int(rng.bit_generator.random_raw()), int(np.random.PCG64(11).random_raw(11)[10]))

    def test_uniforms_stay_inside_the_open_interval(self) -> None:
        u = uniforms(make_rng(3), 10_000)
        self.assertTrue(np.all(u > 0.0))
        self.assertTrue(np.all(u < 1.0))
        self.assertFalse(bernoulli(make_rng(3), 0.0))
        self.assertTrue(bernoulli(make_rng(3), 1.0))


class SampleWithoutReplacementTests(unittest.TestCase):
    def test_indices_are_distinct_and_in_range(self) -> None:
        rng = make_rng(5)
        for population, size in ((10, 10), (50, 7), (1, 1), (4, 0)):
            got = sample_without_replacement(rng, population, size)
            self.assertEqual(len(got), size)
            self.assertEqual(len(set(got.tolist())), size)
            self.assertTrue(all(0 <= i < population for i in got))

    def test_heavy_weight_is_picked_first(self) -> None:
        rng = make_rng(9)
        weights = np.array([1.0] * 9 + [1000.0])
        hits = sum(int(sample_without_replacement(rng, 10, 1, weights)[0] == 9) for _ in range(300))
        self.assertGreaterEqual(hits, 270)

    def test_same_seed_same_draw(self) -> None:
        weights = np.linspace(1.0, 2.0, 40)
        a = sample_without_replacement(make_rng(42), 40, 12, weights)
        b = sample_without_replacement(make_rng(42), 40, 12, weights)
        self.assertEqual(a.tolist(), b.tolist())

    def test_invalid_requests(self) -> None:
        rng = make_rng(0)
        with self.assertRaises(ValueError):
            sample_without_replacement(rng, 3, 4)
        with self.assertRaises(ValueError):
            sample_without_replacement(rng, 3, 1, np.array([1.0, 0.0, 1.0]))
        with self.assertRaises(ValueError):
            sample_without_replacement(rng, 3, 1, np.array([1.0, 1.0]))


if __name__ == "__main__":
    unittest.main()

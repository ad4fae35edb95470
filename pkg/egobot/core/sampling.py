"""Draws built only on the bit generator's raw 64-bit output.

``Generator.choice`` and friends may change their algorithms between numpy
releases; the raw stream of a seeded bit generator may not. Everything here
consumes exactly one raw word per uniform so a seed pins the same graph on
every numpy version.
"""
from __future__ import annotations
from typing import Optional

import numpy as np

_UNIT = 2.0 ** -53


def uniforms(rng: np.random.Generator, size: int) -> np.ndarray:
    """``size`` doubles in the open interval (0, 1)."""

    raw = rng.bit_generator.random_raw(size)
    return ((raw >> np.uint64(11)).astype(np.float64) + 0.5) * _UNIT


def bernoulli(rng: np.random.Generator, p: float) -> bool:
    return bool(uniforms(rng, 1)[0] < p)


def sample_without_replacement(
    rng: np.random.Generator,
    population: int,
    size: int,
    weights: Optional[np.ndarray] = None,
) -> np.ndarray:
    """``size`` distinct indices of ``range(population)``.

    Weighted draws follow successive sampling (each pick proportional to the
    remaining weights) via exponential keys ``log(u) / w``; the ``size``
    largest keys win, ties to the lower index.
    """

    if size < 0 or size > population:
        raise ValueError(f"cannot draw {size} of {population} without replacement")
    if size == 0:
        return np.empty(0, dtype=np.int64)
    keys = np.log(uniforms(rng, population))
    if weights is not None:
        w = np.asarray(weights, dtype=float)
        if w.shape != (population,) or not np.all(w > 0):
            raise ValueError("weights must be positive, one per population member")
        keys = keys / w
    return np.argsort(-keys, kind="stable")[:size].astype(np.int64)

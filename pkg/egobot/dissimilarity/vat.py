"""Visual assessment of clustering tendency.

References:
    J. C. Bezdek and R. J. Hathaway, "VAT: a tool for visual assessment of
    (cluster) tendency", IJCNN 2002.
"""
from __future__ import annotations
from pathlib import Path
from typing import List, Sequence

import numpy as np

from ..ops.serialize import write_bytes_atomic
from .metrics import DissimilarityMatrix


def vat_order(d: DissimilarityMatrix) -> List[int]:
    """Prim-style ordering starting from a row that holds the global maximum.

    Ties go to the lowest index, so the order is deterministic.
    """

    n = d.n
    if n < 2:
        raise ValueError(f"VAT needs >= 2 objects, got {n}")
    dist = d.d
    first = int(np.unravel_index(np.argmax(dist), dist.shape)[0])
    order = [first]
    selected = np.zeros(n, dtype=bool)
    selected[first] = True
    nearest = dist[first].copy()
    for _ in range(n - 1):
        candidates = np.where(selected, np.inf, nearest)
        nxt = int(np.argmin(candidates))
        order.append(nxt)
        selected[nxt] = True
        nearest = np.minimum(nearest, dist[nxt])
    return order


def idm_pixels(d: DissimilarityMatrix, order: Sequence[int]) -> np.ndarray:
    """Ordered image: 0 (black) for identical objects, 255 for the largest dissimilarity."""

    order = list(order)
    if sorted(order) != list(range(d.n)):
        raise ValueError("order is not a permutation of the matrix rows")
    ordered = d.d[np.ix_(order, order)]
    top = float(d.d.max()) if d.n else 0.0
    scale = top if top > 0 else 1.0
    return np.floor(255.0 * ordered / scale + 0.5).astype(np.uint8)


def render_idm(d: DissimilarityMatrix, order: Sequence[int], path: str | Path) -> Path:
    """Write the ordered dissimilarity image as a binary PGM (P5, maxval 255)."""

    pixels = idm_pixels(d, order)
    n = pixels.shape[0]
    header = f"P5\n{n} {n}\n255\n".encode("ascii")
    return write_bytes_atomic(path, header + pixels.tobytes(order="C"))

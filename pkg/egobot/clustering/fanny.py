"""Fuzzy analysis (FANNY) over a dissimilarity matrix.

Memberships are updated with the relational fuzzy c-means fixed point for
the FANNY objective

    sum_v  sum_ij u_iv^r u_jv^r d(i, j) / (2 sum_j u_jv^r)

and every accepted step is checked against the objective, halving the step
toward the new memberships until it does not increase.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..dissimilarity.metrics import DissimilarityMatrix
from .base import ClusterAssignment, check_k, compact_labels
from .pam import pam

logger = logging.getLogger(__name__)

ROW_TOL = 1e-9
_MAX_HALVINGS = 30


@dataclass(frozen=True, slots=True)
class MembershipMatrix:
    """n x k nonnegative memberships; every row sums to 1."""

    u: np.ndarray

    def __post_init__(self) -> None:
        u = np.array(self.u, dtype=float)
        if u.ndim != 2:
            raise ValueError(f"memberships must be 2-D, got shape {u.shape}")
        if np.any(u < 0):
            raise ValueError("memberships must be nonnegative")
        if np.any(np.abs(u.sum(axis=1) - 1.0) > ROW_TOL):
            raise ValueError("membership rows must sum to 1")
        u.setflags(write=False)
        object.__setattr__(self, "u", u)

    @property
    def n(self) -> int:
        return self.u.shape[0]

    @property
    def k(self) -> int:
        return self.u.shape[1]

    def crisp(self) -> Tuple[int, ...]:
        """Row-wise argmax (ties to the lower cluster), renumbered 1..k' over non-empty clusters."""

        return compact_labels([int(c) for c in np.argmax(self.u, axis=1)])


@dataclass(frozen=True, slots=True)
class FannyResult:
    memberships: MembershipMatrix
    assignment: ClusterAssignment
    objective: float
    objective_trace: Tuple[float, ...]
    iterations: int
    converged: bool


def fanny_objective(dist: np.ndarray, u: np.ndarray, memb_exp: float = 2.0) -> float:
    w = u ** memb_exp
    total = 0.0
    for v in range(w.shape[1]):
        mass = w[:, v].sum()
        if mass > 0:
            total += float(w[:, v] @ dist @ w[:, v]) / (2.0 * mass)
    return total


def _memberships_from(a: np.ndarray, memb_exp: float, eps: float) -> np.ndarray:
    """u_iv proportional to a_iv^(-1/(r-1)); rows with a near-zero entry go crisp."""

    u = np.empty_like(a)
    power = 1.0 / (memb_exp - 1.0)
    for i, row in enumerate(a):
        low = row.min()
        if low <= eps:
            hit = row <= low + eps
            u[i] = hit / hit.sum()
        else:
            inv = (1.0 / row) ** power
            u[i] = inv / inv.sum()
    return u


def _update(dist: np.ndarray, u: np.ndarray, memb_exp: float, eps: float) -> np.ndarray:
    w = u ** memb_exp
    mass = w.sum(axis=0)
    mass[mass == 0] = 1.0
    proto = w / mass
    spread = dist @ proto
    half = 0.5 * np.einsum("iv,iv->v", proto, spread)
    return _memberships_from(spread - half, memb_exp, eps)


def initial_memberships(d: DissimilarityMatrix, k: int, memb_exp: float = 2.0) -> np.ndarray:
    """Memberships from the distances to the PAM medoids."""

    medoids = pam(d, k).medoids
    eps = 1e-12 * max(float(d.d.max()), 1.0)
    return _memberships_from(d.d[:, list(medoids)], memb_exp, eps)


def fanny(
    d: DissimilarityMatrix,
    k: int,
    memb_exp: float = 2.0,
    tol: float = 1e-9,
    max_iter: int = 500,
    init: Optional[np.ndarray] = None,
) -> FannyResult:
    check_k(d, k)
    if memb_exp <= 1.0:
        raise ValueError(f"membership exponent must be > 1, got {memb_exp}")
    dist = d.d
    eps = 1e-12 * max(float(dist.max()), 1.0)
    if init is None:
        u = initial_memberships(d, k, memb_exp)
    else:
        u = MembershipMatrix(init).u.copy()
        if u.shape != (d.n, k):
            raise ValueError(f"initial memberships must be {d.n} x {k}, got {u.shape}")
    obj = fanny_objective(dist, u, memb_exp)
    trace = [obj]
    converged = False
    it = 0
    while it < max_iter:
        it += 1
        proposal = _update(dist, u, memb_exp, eps)
        new_obj = fanny_objective(dist, proposal, memb_exp)
        step = 1.0
        halvings = 0
        while new_obj > obj and halvings < _MAX_HALVINGS:
            step /= 2.0
            halvings += 1
            candidate = u + step * (proposal - u)
            proposal_try = candidate / candidate.sum(axis=1, keepdims=True)
            new_obj = fanny_objective(dist, proposal_try, memb_exp)
            if new_obj <= obj:
                proposal = proposal_try
        if new_obj > obj:
            converged = True
            break
        decrease = obj - new_obj
        u, obj = proposal, new_obj
        trace.append(obj)
        if decrease < tol:
            converged = True
            break
    if not converged:
        logger.warning("fanny k=%d did not converge in %d iterations (objective %.6g)", k, max_iter, obj)
    memberships = MembershipMatrix(u)
    assignment = ClusterAssignment(d.ids, memberships.crisp(), "fanny")
    return FannyResult(memberships, assignment, obj, tuple(trace), it, converged)

from __future__ import annotations

from typing import Protocol

from ..core.ego import EgoNetwork


class GraphReducer(Protocol):
    """Turns a K2 ego network into its reduced (K1) counterpart."""

    name: str

    def __call__(self, net: EgoNetwork) -> EgoNetwork:
        ...

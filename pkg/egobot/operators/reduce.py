from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Optional

from ..core.ego import EgoNetwork, reduce_to_k1, reduce_to_kcore
from ..core.errors import ConfigError
from .base import GraphReducer

_KCORE_RE = re.compile(r"kcore(?::(\d+))?")


@dataclass(frozen=True, slots=True)
class _Reducer:
    name: str
    fn: Callable[[EgoNetwork], EgoNetwork]

    def __call__(self, net: EgoNetwork) -> EgoNetwork:
        return self.fn(net)


def ego() -> GraphReducer:
    return _Reducer("ego", reduce_to_k1)


def kcore(k: Optional[int] = None) -> GraphReducer:
    """k-core reduction; ``None`` keeps the main core of each K2 network."""

    if k is not None and k < 1:
        raise ConfigError(f"k-core order must be >= 1, got {k}")

    def op(net: EgoNetwork) -> EgoNetwork:
        return reduce_to_kcore(net, k)

    return _Reducer("kcore" if k is None else f"kcore:{k}", op)


def parse(expr: str) -> GraphReducer:
    """``ego``, ``kcore`` (main core) or ``kcore:<k>``."""

    expr = expr.strip()
    if expr == "ego":
        return ego()
    match = _KCORE_RE.fullmatch(expr)
    if not match:
        raise ConfigError(f"Invalid reduction {expr!r}; expected 'ego', 'kcore' or 'kcore:<k>'")
    return kcore(None if match.group(1) is None else int(match.group(1)))

from .base import GraphReducer
from . import reduce

__all__ = [
    "GraphReducer",
    "reduce",
]

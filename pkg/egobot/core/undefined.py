from __future__ import annotations
from enum import Enum
from typing import Any, Union

import numpy as np


class DegeneratePolicy(str, Enum):
    """What to do with an ego network too small to measure."""

    EXCLUDE = "exclude"
    IMPUTE = "impute"


class _UndefinedType:
    """Singleton sentinel for a measure with no mathematical value."""

    __slots__ = ()

    def __bool__(self) -> bool:  # pragma: no cover - trivial
        return False

    def __repr__(self) -> str:  # pragma: no cover - trivial
        return "<UNDEFINED>"

    def __reduce__(self) -> str:
        # keeps identity across process-pool pickling
        return "UNDEFINED"


UNDEFINED = _UndefinedType()

MaybeFloat = Union[float, _UndefinedType]


def is_undefined(x: Any) -> bool:
    return x is UNDEFINED


def or_default(x: MaybeFloat, default: float) -> float:
    return default if x is UNDEFINED else float(x)  # type: ignore[arg-type]


def format_value(x: Any) -> str:
    """CSV rendering: ``NA`` for undefined, ``repr`` for floats."""

    if x is UNDEFINED:
        return "NA"
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    # np.float64 is a float whose repr carries the type name under numpy 2
    if isinstance(x, (float, np.floating)):
        return repr(float(x))
    if isinstance(x, np.integer):
        return str(int(x))
    return str(x)


def parse_value(raw: str) -> MaybeFloat:
    raw = raw.strip()
    if raw == "NA":
        return UNDEFINED
    return float(raw)

from __future__ import annotations
import dataclasses
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List

from ..core.errors import ConfigError


class BotStrategy(str, Enum):
    UNIFORM_RANDOM = "uniform_random"
    DEGREE_PREFERENTIAL = "degree_preferential"


class Attachment(str, Enum):
    """How new humans pick whom to follow."""

    PREFERENTIAL = "preferential"
    # degree-matched control
    UNIFORM = "uniform"


@dataclass(frozen=True, slots=True)
class GeneratorConfig:
    n_humans: int = 200
    n_bots: int = 100
    human_attachment: int = 3
    human_reciprocation_prob: float = 0.4
    capitalist_fraction: float = 0.1
    bot_out_degree: int = 50
    bot_strategy: BotStrategy = BotStrategy.UNIFORM_RANDOM
    seed: int = 42
    attachment: Attachment = Attachment.PREFERENTIAL
    disguised_bots: bool = False

    def __post_init__(self) -> None:
        try:
            object.__setattr__(self, "bot_strategy", BotStrategy(self.bot_strategy))
            object.__setattr__(self, "attachment", Attachment(self.attachment))
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        for name in ("n_humans", "n_bots", "bot_out_degree"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be >= 0, got {getattr(self, name)}")
        for name in ("human_reciprocation_prob", "capitalist_fraction"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ConfigError(f"{name} must be in [0, 1], got {getattr(self, name)}")
        if self.human_attachment < 1:
            raise ConfigError(f"human_attachment must be >= 1, got {self.human_attachment}")
        if self.n_humans + self.n_bots < 3:
            raise ConfigError(f"need n_humans + n_bots >= 3, got {self.n_humans + self.n_bots}")
        if self.n_humans < self.human_attachment + 1:
            raise ConfigError(f"n_humans must be >= human_attachment + 1 = {self.human_attachment + 1}, got {self.n_humans}")
        if self.n_bots and self.bot_out_degree > self.n_humans:
            raise ConfigError(f"bot_out_degree {self.bot_out_degree} exceeds the {self.n_humans} humans available")
        if not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    def replace(self, **changes: Any) -> GeneratorConfig:
        try:
            return dataclasses.replace(self, **changes)
        except TypeError as exc:
            raise ConfigError(str(exc)) from None

    def items(self) -> List[tuple]:
        out = []
        for f in dataclasses.fields(self):
            value = getattr(self, f.name)
            out.append((f.name, value.value if isinstance(value, Enum) else value))
        return out

    @classmethod
    def from_mapping(cls, raw: Dict[str, str]) -> GeneratorConfig:
        """Build from string values, e.g. a parsed ``key=value`` file."""

        kinds = {f.name: f.type for f in dataclasses.fields(cls)}
        values: Dict[str, Any] = {}
        for key, text in raw.items():
            if key not in kinds:
                raise ConfigError(f"Unknown generator option '{key}'")
            values[key] = _coerce(key, kinds[key], text)
        return cls(**values)


def _coerce(key: str, kind: Any, text: str) -> Any:
    kind = str(kind)
    try:
        if kind == "int":
            return int(text)
        if kind == "float":
            return float(text)
        if kind == "bool":
            if text.lower() not in ("true", "false", "1", "0", "yes", "no"):
                raise ValueError(text)
            return text.lower() in ("true", "1", "yes")
    except ValueError:
        raise ConfigError(f"Invalid value {text!r} for '{key}'") from None
    return text


PRESETS: Dict[str, GeneratorConfig] = {
    "default": GeneratorConfig(),
    "small": GeneratorConfig(n_humans=40, n_bots=20, bot_out_degree=10),
}


def preset(name: str) -> GeneratorConfig:
    try:
        return PRESETS[name]
    except KeyError:
        raise ConfigError(f"Unknown preset '{name}', expected one of {', '.join(PRESETS)}") from None

"""Pipeline configuration: defaults, ``key=value`` files and overrides.

Precedence is defaults < config file < command-line flags.
"""
from __future__ import annotations
import dataclasses
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple

from .clustering.methods import CLUSTERER_NAMES
from .core.ego import Depth
from .core.errors import ConfigError
from .core.undefined import DegeneratePolicy
from .dissimilarity.metrics import DistanceMethod
from .measures.vector import MIN_SIZE
from .operators import reduce as reducers
from .synthgen.config import GeneratorConfig, preset

_LIST_KEYS = frozenset({"distances", "clusterers", "graphs", "idm_distances"})
_PATH_KEYS = frozenset({"edges", "labels", "egos", "out"})


@dataclass(frozen=True, slots=True)
class PipelineConfig:
    edges: Optional[Path] = None
    labels: Optional[Path] = None
    egos: Optional[Path] = None
    out: Path = Path("out")
    generator: GeneratorConfig = field(default_factory=GeneratorConfig)
    distances: Tuple[DistanceMethod, ...] = (DistanceMethod.PEARSON, DistanceMethod.SPEARMAN)
    clusterers: Tuple[str, ...] = CLUSTERER_NAMES
    graphs: Tuple[Depth, ...] = (Depth.K2, Depth.K1)
    idm_distances: Tuple[DistanceMethod, ...] = ()
    k: int = 2
    reduce: str = "kcore"
    seed: int = 42
    policy: DegeneratePolicy = DegeneratePolicy.EXCLUDE
    min_size: int = MIN_SIZE
    jobs: int = 1
    memb_exp: float = 2.0
    nn: int = 10
    sample_fraction: float = 0.10
    validation_distance: DistanceMethod = DistanceMethod.PEARSON

    def __post_init__(self) -> None:
        try:
            object.__setattr__(self, "distances", tuple(DistanceMethod(d) for d in self.distances))
            object.__setattr__(self, "idm_distances", tuple(DistanceMethod(d) for d in self.idm_distances))
            object.__setattr__(self, "graphs", tuple(Depth(g) for g in self.graphs))
            object.__setattr__(self, "policy", DegeneratePolicy(self.policy))
            object.__setattr__(self, "validation_distance", DistanceMethod(self.validation_distance))
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        object.__setattr__(self, "clusterers", tuple(self.clusterers))
        for name in ("edges", "labels", "egos"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, Path(value))
        object.__setattr__(self, "out", Path(self.out))
        for axis in ("distances", "clusterers", "graphs"):
            if not getattr(self, axis):
                raise ConfigError(f"at least one value is required for '{axis}'")
        unknown = [c for c in self.clusterers if c not in CLUSTERER_NAMES]
        if unknown:
            raise ConfigError(f"Unknown clusterer(s): {', '.join(unknown)}")
        if self.k < 2:
            raise ConfigError(f"k must be >= 2, got {self.k}")
        if self.min_size < MIN_SIZE:
            raise ConfigError(f"min_size must be >= {MIN_SIZE}, got {self.min_size}")
        if self.jobs < 1:
            raise ConfigError(f"jobs must be >= 1, got {self.jobs}")
        if self.memb_exp <= 1:
            raise ConfigError(f"memb_exp must be > 1, got {self.memb_exp}")
        reducers.parse(self.reduce)

    @property
    def grid_size(self) -> int:
        return len(self.distances) * len(self.clusterers) * len(self.graphs)

    @property
    def image_distances(self) -> Tuple[DistanceMethod, ...]:
        return self.idm_distances or self.distances

    def replace(self, **changes: Any) -> PipelineConfig:
        try:
            return dataclasses.replace(self, **changes)
        except TypeError as exc:
            raise ConfigError(str(exc)) from None

    @classmethod
    def from_mapping(cls, raw: Mapping[str, str], base: Optional[PipelineConfig] = None) -> PipelineConfig:
        """Apply string options (from a config file) on top of ``base``.

        Generator options (``n_humans``, ``bot_strategy``, ...) and ``preset``
        configure the synthetic dataset.
        """

        base = base or cls()
        kinds = {f.name: str(f.type) for f in dataclasses.fields(cls)}
        gen_keys = {f.name for f in dataclasses.fields(GeneratorConfig)}
        generator = base.generator
        if "preset" in raw:
            generator = preset(raw["preset"])
        gen_raw = {k: v for k, v in raw.items() if k in gen_keys}
        if gen_raw:
            generator = _merge_generator(generator, gen_raw)
        changes: Dict[str, Any] = {"generator": generator}
        for key, text in raw.items():
            if (key in gen_keys and key != "seed") or key == "preset":
                continue
            if key not in kinds or key == "generator":
                raise ConfigError(f"Unknown config key '{key}'")
            changes[key] = _coerce(key, kinds[key], text)
        return base.replace(**changes)


def _merge_generator(generator: GeneratorConfig, raw: Mapping[str, str]) -> GeneratorConfig:
    return GeneratorConfig.from_mapping({**{k: str(v) for k, v in generator.items()}, **raw})


def known_keys() -> frozenset:
    pipeline = {f.name for f in dataclasses.fields(PipelineConfig)} - {"generator"}
    return frozenset(pipeline | {f.name for f in dataclasses.fields(GeneratorConfig)} | {"preset"})


def _coerce(key: str, kind: str, text: str) -> Any:
    text = text.strip()
    if key in _LIST_KEYS:
        return tuple(part.strip() for part in text.split(",") if part.strip())
    if key in _PATH_KEYS:
        return Path(text)
    try:
        if kind == "int":
            return int(text)
        if kind == "float":
            return float(text)
    except ValueError:
        raise ConfigError(f"Invalid value {text!r} for '{key}'") from None
    return text


def parse_config_text(text: str, source: str = "<config>") -> Dict[str, str]:
    """``key=value`` lines; ``#`` starts a comment, blank lines are ignored."""

    out: Dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ConfigError(f"{source}:{lineno}: expected 'key=value', got {line!r}")
        if key not in known_keys():
            raise ConfigError(f"{source}:{lineno}: unknown key '{key}'")
        if key in out:
            raise ConfigError(f"{source}:{lineno}: duplicate key '{key}'")
        out[key] = value.strip()
    return out


def load_config(path: str | Path, base: Optional[PipelineConfig] = None) -> PipelineConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8-sig")
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc.strerror}") from None
    except UnicodeDecodeError as exc:
        raise ConfigError(f"config file {path} is not UTF-8 text ({exc.reason} at byte {exc.start})") from None
    raw = parse_config_text(text, str(path))
    try:
        return PipelineConfig.from_mapping(raw, base)
    except ConfigError as exc:
        raise ConfigError(f"{path}: {exc}") from None

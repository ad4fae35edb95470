from .config import PRESETS, Attachment, BotStrategy, GeneratorConfig, preset
from .growth import (
    RNG_ALGORITHM,
    GrowthState,
    LabeledDataset,
    attach_bot,
    follow_back_rate,
    generate_dataset,
    generate_human_substrate,
    grow_humans,
    make_rng,
)

__all__ = [
    "PRESETS",
    "Attachment",
    "BotStrategy",
    "GeneratorConfig",
    "preset",
    "RNG_ALGORITHM",
    "GrowthState",
    "LabeledDataset",
    "attach_bot",
    "follow_back_rate",
    "generate_dataset",
    "generate_human_substrate",
    "grow_humans",
    "make_rng",
]

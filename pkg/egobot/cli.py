"""Command-line entry point: ``egobot <generate|features|classify|validate|run> [flags]``."""
from __future__ import annotations
import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from .api import Pipeline
from .config import PipelineConfig, load_config
from .core.errors import EgobotError
from .synthgen.config import preset

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_GRID_FAILED = 1
EXIT_ERROR = 2


def _csv_list(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="key=value config file (flags override it)")
    common.add_argument("--out", type=Path, help="output directory (default: out)")
    common.add_argument("--edges", type=Path, help="edge-list CSV (source,target)")
    common.add_argument("--labels", type=Path, help="labels CSV (user_id,label)")
    common.add_argument("--egos", type=Path, help="file with one ego id per line")
    common.add_argument("--distances", type=_csv_list, help="comma-separated: euclidean,pearson,spearman,kendall")
    common.add_argument("--idm-distances", dest="idm_distances", type=_csv_list, help="distances to render as IDM images")
    common.add_argument("--clusterers", type=_csv_list, help="comma-separated: pam,fanny,agnes")
    common.add_argument("--graphs", type=_csv_list, help="comma-separated: k2,k1")
    common.add_argument("--k", type=int, help="number of clusters (default 2)")
    common.add_argument("--reduce", help="K1 reduction: kcore (main core, default), kcore:<k> or ego")
    common.add_argument("--min-size", dest="min_size", type=int, help="smallest ego network kept (>= 3)")
    common.add_argument("--policy", choices=("exclude", "impute"), help="degenerate-ego policy")
    common.add_argument("--jobs", type=int, help="worker processes (default 1)")
    common.add_argument("--seed", type=int, help="seed for generation and validation sampling")
    common.add_argument("--preset", help="generator preset: default or small")
    common.add_argument("--log-level", dest="log_level", default="WARNING", help="DEBUG, INFO, WARNING or ERROR")
    common.add_argument("-v", "--verbose", action="store_true", help="shorthand for --log-level INFO")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="egobot", description="Ego-network topology bot detection by unsupervised clustering.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()
    for name, help_text in (
        ("generate", "generate a labelled synthetic follower graph"),
        ("features", "compute K2 and K1 ego-network measures"),
        ("classify", "cluster the feature tables and score them against the labels"),
        ("validate", "internal and stability validation over methods and k"),
        ("run", "all stages"),
    ):
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.set_defaults(func=globals()[f"cmd_{name}"])
        if name == "validate":
            cmd.add_argument("--features", type=Path, help="feature CSV to validate (default: <out>/k2_features.csv)")
    return parser


def config_from_args(args: argparse.Namespace) -> PipelineConfig:
    """Defaults, then ``--config``, then explicit flags."""

    cfg = PipelineConfig()
    if args.config is not None:
        cfg = load_config(args.config, cfg)
    changes: Dict[str, Any] = {}
    for key in (
        "out", "edges", "labels", "egos", "distances", "idm_distances", "clusterers",
        "graphs", "k", "reduce", "min_size", "policy", "jobs", "seed",
    ):
        value = getattr(args, key, None)
        if value is not None:
            changes[key] = value
    generator = cfg.generator
    if args.preset is not None:
        generator = preset(args.preset)
    if args.seed is not None:
        generator = generator.replace(seed=args.seed)
    changes["generator"] = generator
    return cfg.replace(**changes)


def cmd_generate(pipeline: Pipeline, args: argparse.Namespace) -> int:
    pipeline.generate()
    return EXIT_OK


def cmd_features(pipeline: Pipeline, args: argparse.Namespace) -> int:
    pipeline.features()
    return EXIT_OK


def cmd_classify(pipeline: Pipeline, args: argparse.Namespace) -> int:
    return EXIT_OK if pipeline.classify().ok else EXIT_GRID_FAILED


def cmd_validate(pipeline: Pipeline, args: argparse.Namespace) -> int:
    pipeline.validate(args.features)
    return EXIT_OK


def cmd_run(pipeline: Pipeline, args: argparse.Namespace) -> int:
    return EXIT_OK if pipeline.run().ok else EXIT_GRID_FAILED


def _configure_logging(args: argparse.Namespace) -> None:
    level = "INFO" if args.verbose and args.log_level.upper() == "WARNING" else args.log_level.upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args)
    try:
        pipeline = Pipeline(config_from_args(args))
        return args.func(pipeline, args)
    except (EgobotError, OSError) as exc:
        print(f"egobot: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

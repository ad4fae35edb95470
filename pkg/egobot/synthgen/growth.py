"""Seeded growth of a labelled follower graph.

Humans arrive one at a time and follow earlier humans (preferentially by
total degree + 1, or uniformly for the control substrate). Each follow is
returned with probability ``human_reciprocation_prob``; social capitalists
always follow back. Bots arrive after the substrate and follow humans only.
"""
from __future__ import annotations
import logging
from dataclasses import dataclass
from typing import Dict, List, Set

import numpy as np

from ..core.errors import ConfigError
from ..core.graph import DirectedGraph
from ..core.sampling import bernoulli, sample_without_replacement
from .config import Attachment, BotStrategy, GeneratorConfig

logger = logging.getLogger(__name__)

RNG_ALGORITHM = "numpy PCG64, raw 64-bit stream"


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


class GrowthState:
    """Mutable graph under construction; node ``i`` is the i-th arrival."""

    def __init__(self, capacity: int, capitalists: Set[int]):
        self.out: List[Set[int]] = [set() for _ in range(capacity)]
        self.in_degree = np.zeros(capacity, dtype=np.int64)
        self.out_degree = np.zeros(capacity, dtype=np.int64)
        self.size = 0
        self.capitalists = capitalists
        self.reciprocations = 0

    def add_node(self) -> int:
        if self.size >= len(self.out):
            raise ConfigError("graph capacity exhausted")
        self.size += 1
        return self.size - 1

    def follow(self, u: int, v: int) -> None:
        if v not in self.out[u]:
            self.out[u].add(v)
            self.out_degree[u] += 1
            self.in_degree[v] += 1

    def follow_back(self, target: int, follower: int) -> None:
        self.follow(target, follower)
        self.reciprocations += 1

    def to_graph(self, ids: List[str]) -> DirectedGraph:
        return DirectedGraph.from_edges(ids[: self.size], ((u, v) for u in range(self.size) for v in self.out[u]))


def node_ids(cfg: GeneratorConfig) -> List[str]:
    """Zero-padded numeric ids, humans first."""

    total = cfg.n_humans + cfg.n_bots
    width = len(str(max(total - 1, 0)))
    return [str(i).zfill(width) for i in range(total)]


def pick_capitalists(cfg: GeneratorConfig, rng: np.random.Generator) -> Set[int]:
    count = int(round(cfg.capitalist_fraction * cfg.n_humans))
    return {int(i) for i in sample_without_replacement(rng, cfg.n_humans, count)}


def grow_humans(cfg: GeneratorConfig, rng: np.random.Generator) -> GrowthState:
    state = GrowthState(cfg.n_humans + cfg.n_bots, pick_capitalists(cfg, rng))
    for _ in range(cfg.n_humans):
        t = state.add_node()
        want = min(cfg.human_attachment, t)
        if not want:
            continue
        if cfg.attachment is Attachment.PREFERENTIAL:
            weights = (state.in_degree[:t] + state.out_degree[:t] + 1).astype(float)
            weights /= weights.sum()
        else:
            weights = None
        targets = sample_without_replacement(rng, t, want, weights)
        for v in sorted(int(x) for x in targets):
            state.follow(t, v)
            if v in state.capitalists or bernoulli(rng, cfg.human_reciprocation_prob):
                state.follow_back(v, t)
    return state


def generate_human_substrate(cfg: GeneratorConfig, rng: np.random.Generator) -> DirectedGraph:
    return grow_humans(cfg, rng).to_graph(node_ids(cfg))


def attach_bot(state: GrowthState, cfg: GeneratorConfig, rng: np.random.Generator) -> int:
    """Add one bot that follows ``bot_out_degree`` humans; returns its node index."""

    humans = min(state.size, cfg.n_humans)
    if humans == 0:
        raise ConfigError("cannot attach a bot to an empty substrate")
    if cfg.bot_out_degree > humans:
        raise ConfigError(f"bot_out_degree {cfg.bot_out_degree} exceeds substrate size {humans}")
    if cfg.bot_strategy is BotStrategy.DEGREE_PREFERENTIAL:
        weights = (state.in_degree[:humans] + 1).astype(float)
        weights /= weights.sum()
    else:
        weights = None
    bot = state.add_node()
    targets = sample_without_replacement(rng, humans, cfg.bot_out_degree, weights)
    disguised = cfg.disguised_bots and cfg.bot_strategy is BotStrategy.DEGREE_PREFERENTIAL
    for v in sorted(int(x) for x in targets):
        state.follow(bot, v)
        if v in state.capitalists or (disguised and bernoulli(rng, cfg.human_reciprocation_prob)):
            state.follow_back(v, bot)
    return bot


def follow_back_rate(g: DirectedGraph, node: int) -> float:
    """Share of the accounts ``node`` follows that follow it back."""

    friends = g.out_adj[node]
    if not friends:
        return 0.0
    return sum(1 for v in friends if g.has_edge(v, node)) / len(friends)


@dataclass(frozen=True, slots=True)
class LabeledDataset:
    graph: DirectedGraph
    labels: Dict[str, int]
    config: GeneratorConfig

    def tallies(self) -> Dict[str, int]:
        bots = sum(self.labels.values())
        return {"bot": bots, "not": len(self.labels) - bots}

    def metadata_lines(self) -> List[str]:
        lines = [f"{key}={value}" for key, value in self.config.items()]
        lines.append(f"rng={RNG_ALGORITHM}")
        lines.append(f"numpy_version={np.__version__}")
        return lines


def generate_dataset(cfg: GeneratorConfig) -> LabeledDataset:
    rng = make_rng(cfg.seed)
    state = grow_humans(cfg, rng)
    for _ in range(cfg.n_bots):
        attach_bot(state, cfg, rng)
    ids = node_ids(cfg)
    graph = state.to_graph(ids)
    labels = {nid: int(i >= cfg.n_humans) for i, nid in enumerate(ids)}
    logger.info(
        "generated %d humans + %d bots, %d edges (%d reciprocations, %d capitalists)",
        cfg.n_humans, cfg.n_bots, graph.m, state.reciprocations, len(state.capitalists),
    )
    return LabeledDataset(graph, labels, cfg)

"""
Counter-based random sub-streams for a single simulation run.

Every run draws from five independent Philox generators derived from one
integer seed: ``SeedSequence(entropy=seed, spawn_key=(i,))`` with ``i`` the
channel index below. Consuming more variates on one channel never shifts
another channel, so regimes and parameter values can be compared draw for draw.
"""

from dataclasses import dataclass

import numpy as np

from news_market.core.models import InvalidParameterError

CHANNELS = ('coefficients', 'speculator_news', 'investor_news', 'weights', 'noise')


def channel_generator(seed: int, channel: str) -> np.random.Generator:
    """Build the generator for one named channel of ``seed``."""
    if channel not in CHANNELS:
        raise InvalidParameterError('channel', f"unknown channel '{channel}'")
    if seed < 0:
        raise InvalidParameterError('seed', f"must be nonnegative, got {seed}")
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(CHANNELS.index(channel),))
    return np.random.Generator(np.random.Philox(sequence))


@dataclass
class MarketStreams:
    """Per-channel generators of one run."""
    seed: int
    coefficients: np.random.Generator
    speculator_news: np.random.Generator
    investor_news: np.random.Generator
    weights: np.random.Generator
    noise: np.random.Generator

    @classmethod
    def from_seed(cls, seed: int) -> 'MarketStreams':
        generators = {name: channel_generator(seed, name) for name in CHANNELS}
        return cls(seed=seed, **generators)

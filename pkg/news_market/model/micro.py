"""
Agent-level demands, used to check the aggregate excess-demand equation.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from news_market.core.models import InvalidParameterError


class AgentKind(str, Enum):
    SPECULATOR = 'speculator'
    INVESTOR = 'investor'


@dataclass(frozen=True)
class MicroAgent:
    """
    A single speculator or value-investor.

    ``sensitivity`` is alpha for speculators and gamma for investors;
    ``expectation`` is the expected price change d_it for speculators and the
    expected value V_jt for investors.
    """
    kind: AgentKind
    sensitivity: float
    expectation: float

    def __post_init__(self):
        object.__setattr__(self, 'kind', AgentKind(self.kind))
        if not self.sensitivity > 0:
            name = 'alpha' if self.kind is AgentKind.SPECULATOR else 'gamma'
            raise InvalidParameterError(name, f"must be strictly positive, got {self.sensitivity}")

    @classmethod
    def speculator(cls, alpha: float, expected_change: float) -> 'MicroAgent':
        return cls(AgentKind.SPECULATOR, alpha, expected_change)

    @classmethod
    def investor(cls, gamma: float, expected_value: float) -> 'MicroAgent':
        return cls(AgentKind.INVESTOR, gamma, expected_value)

    @classmethod
    def speculator_from_trend(cls, alpha: float, weights: Sequence[float],
                              past_changes: Sequence[float], noise: float = 0.0) -> 'MicroAgent':
        """
        Trend-following speculator with d_it = sum_k w_ikt d_{t-k} + eps_it.

        ``past_changes`` is most recent first (d_{t-1}, d_{t-2}, ...).
        """
        if len(weights) != len(past_changes):
            raise InvalidParameterError('weights', "need one weight per past change")
        expected = math.fsum(w * d for w, d in zip(weights, past_changes)) + noise
        return cls.speculator(alpha, expected)

    def demand(self, price: float) -> float:
        """Desired purchase (negative for a sale) at ``price``."""
        if self.kind is AgentKind.SPECULATOR:
            return self.sensitivity * self.expectation
        return self.sensitivity * (self.expectation - price)


def micro_excess_demand(agents: Iterable[MicroAgent], price: float) -> float:
    """Sum of individual demands; 0 for an empty market."""
    return math.fsum(agent.demand(price) for agent in agents)


def aggregate_excess_demand(alpha: float, n: int, dbar: float,
                            gamma: float, m: int, vbar: float, price: float) -> float:
    """Aggregate form alpha*N*dbar + gamma*M*(vbar - price)."""
    return alpha * n * dbar + gamma * m * (vbar - price)


def price_impact(excess_demand: float, beta: float) -> float:
    """Linear price adjustment d_t = beta * x_t."""
    if not beta > 0:
        raise InvalidParameterError('beta', f"must be strictly positive, got {beta}")
    return beta * excess_demand

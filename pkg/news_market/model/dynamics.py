"""
One-step recursions of the news-driven and trend-following regimes.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from news_market.core.models import InvalidParameterError
from news_market.model.streams import MarketStreams
from news_market.model.types import (
    CoefficientMode, CoefficientModel, MarketState, NewsParams, TrendParams,
)


def sample_coefficients(model: CoefficientModel,
                        rng: np.random.Generator) -> Tuple[float, float]:
    """
    Draw one (a_t, b_t) pair.

    Args:
        model: Coefficient law
        rng: Generator of the coefficients channel

    Returns:
        Fresh nonnegative (a_t, b_t)
    """
    if model.mode is CoefficientMode.DIRECT:
        return float(model.a_dist.sample(rng)), float(model.b_dist.sample(rng))
    n_t = float(model.n_dist.sample(rng))
    m_t = float(model.m_dist.sample(rng))
    return model.alpha * model.beta * n_t, model.gamma * model.beta * m_t


def sample_coefficient_path(model: CoefficientModel, rng: np.random.Generator,
                            steps: int) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorised draw of ``steps`` coefficient pairs (the a path first, then b)."""
    if model.mode is CoefficientMode.DIRECT:
        a = np.asarray(model.a_dist.sample(rng, steps), dtype=float)
        b = np.asarray(model.b_dist.sample(rng, steps), dtype=float)
        return a, b
    n = np.asarray(model.n_dist.sample(rng, steps), dtype=float)
    m = np.asarray(model.m_dist.sample(rng, steps), dtype=float)
    return model.alpha * model.beta * n, model.gamma * model.beta * m


@dataclass(frozen=True)
class NewsShock:
    """News arrivals and shock sizes of one period."""
    speculator_news: bool
    eps: float
    investor_news: bool
    nu: float


@dataclass(frozen=True)
class NewsShockPath:
    """Vectorised news draws for a whole run."""
    speculator_news: np.ndarray
    eps: np.ndarray
    investor_news: np.ndarray
    nu: np.ndarray

    def __len__(self) -> int:
        return len(self.eps)

    def __getitem__(self, i: int) -> NewsShock:
        return NewsShock(bool(self.speculator_news[i]), float(self.eps[i]),
                         bool(self.investor_news[i]), float(self.nu[i]))


def draw_news_shock(params: NewsParams, streams: MarketStreams) -> NewsShock:
    """
    Draw one period of news.

    One uniform and one normal variate are consumed per channel whether or
    not news arrives, so replays line up across values of tau. The order
    (uniform then normal, per period) differs from the block draws of
    ``draw_news_shocks``, so stepping with this function does not reproduce
    ``simulate`` for the same seed.
    """
    u_spec = streams.speculator_news.random()
    z_spec = streams.speculator_news.standard_normal()
    u_inv = streams.investor_news.random()
    z_inv = streams.investor_news.standard_normal()
    return NewsShock(
        speculator_news=bool(u_spec < params.tau),
        eps=params.sigma_eps * float(z_spec),
        investor_news=bool(u_inv < params.tau_prime),
        nu=params.sigma_nu * float(z_inv),
    )


def draw_news_shocks(params: NewsParams, streams: MarketStreams, steps: int) -> NewsShockPath:
    """
    Vectorised counterpart of ``draw_news_shock`` used by ``simulate``.

    Each channel draws all ``steps`` uniforms before its normals, so the
    first T periods of a longer path differ from a T-step path.
    """
    u_spec = streams.speculator_news.random(steps)
    z_spec = streams.speculator_news.standard_normal(steps)
    u_inv = streams.investor_news.random(steps)
    z_inv = streams.investor_news.standard_normal(steps)
    return NewsShockPath(
        speculator_news=u_spec < params.tau,
        eps=params.sigma_eps * z_spec,
        investor_news=u_inv < params.tau_prime,
        nu=params.sigma_nu * z_inv,
    )


def step_news(state: MarketState, params: NewsParams, coeffs: Tuple[float, float],
              rng: Optional[MarketStreams] = None,
              shock: Optional[NewsShock] = None) -> Tuple[MarketState, float]:
    """
    Advance a news-regime state by one period, in place.

    Expectations follow random walks driven by the arriving news; the price
    change is d_t = a_t * dbar_t + b_t * (vbar_t - P_{t-1}).

    Args:
        state: Current state (mutated)
        params: News parameters
        coeffs: (a_t, b_t)
        rng: Streams to draw the period's news from
        shock: Injected news; takes precedence over ``rng``

    Returns:
        The advanced state and d_t
    """
    if shock is None:
        if rng is None:
            raise InvalidParameterError('rng', "either streams or an injected shock is required")
        shock = draw_news_shock(params, rng)

    a_t, b_t = coeffs
    if shock.speculator_news:
        state.dbar += shock.eps
    if shock.investor_news:
        state.vbar += shock.nu

    d_t = a_t * state.dbar + b_t * (state.vbar - state.price)
    state.price += d_t
    state.t += 1
    return state, d_t


def step_trend(state: MarketState, params: TrendParams, a_t: float,
               rng: Optional[MarketStreams] = None,
               weights: Optional[Sequence[float]] = None,
               noise: Optional[float] = None) -> Tuple[MarketState, float]:
    """
    Advance a trend-regime state by one period, in place.

    Fresh mean weights w_1t..w_Kt and noise e_t are drawn from the weights
    and noise channels unless injected.
    """
    if weights is None or noise is None:
        if rng is None:
            raise InvalidParameterError('rng', "either streams or injected draws are required")
    if weights is None:
        weights = params.omega_dist.sample(rng.weights, params.k)
    if noise is None:
        noise = params.noise_sigma * float(rng.noise.standard_normal())

    signal = 0.0
    for w, past in zip(weights, state.last_changes):
        signal += float(w) * past
    d_t = a_t * signal + noise

    state.last_changes.appendleft(d_t)
    state.price += d_t
    state.t += 1
    return state, d_t

"""
Full-path simulation and return computation.
"""

import math
from typing import Sequence

import numpy as np

from news_market.core.models import (
    DegenerateRunError, InsufficientDataError, ZeroPriceError,
)
from news_market.model.dynamics import (
    draw_news_shocks, sample_coefficient_path, step_news, step_trend,
)
from news_market.model.streams import MarketStreams
from news_market.model.types import (
    MarketState, NewsParams, RegimeConfig, SimSeries, TrendParams,
)
from news_market.utils.logging_config import get_logger

logger = get_logger('simulation')


def returns_from_prices(prices: Sequence[float]) -> np.ndarray:
    """
    Relative price changes r_t = (P_t - P_{t-1}) / P_{t-1}.

    Raises:
        InsufficientDataError: If fewer than 2 prices are given
        ZeroPriceError: If a denominator price is zero, naming its index
    """
    prices = np.asarray(prices, dtype=float)
    if prices.ndim != 1 or len(prices) < 2:
        raise InsufficientDataError("at least 2 prices are required to compute returns")
    previous = prices[:-1]
    zeros = np.flatnonzero(previous == 0)
    if len(zeros):
        raise ZeroPriceError(int(zeros[0]))
    with np.errstate(over='ignore', invalid='ignore'):
        return np.diff(prices) / previous


def simulate(config: RegimeConfig, seed: int) -> SimSeries:
    """
    Run ``config.steps`` periods of the configured regime.

    The run is a pure function of (config, seed): every random draw comes
    from the seed's ``MarketStreams``. Draws are taken in blocks of length
    ``config.steps``, so a shorter run is not a prefix of a longer one with
    the same seed, and the scalar ``draw_news_shock`` / ``step_news`` path
    does not replay it.

    Raises:
        DegenerateRunError: If the price path makes returns undefined
    """
    streams = MarketStreams.from_seed(seed)
    steps = config.steps
    a_path, b_path = sample_coefficient_path(config.coefficients, streams.coefficients, steps)

    logger.debug(f"Simulating '{config.label}' ({config.kind.value}) for {steps} steps, seed {seed}")

    if isinstance(config.regime, NewsParams):
        changes, prices, values, dbars = _run_news(config.regime, a_path, b_path, streams)
    else:
        changes, prices = _run_trend(config.regime, a_path, streams)
        values = dbars = None

    try:
        returns = returns_from_prices(prices)
    except ZeroPriceError as e:
        raise DegenerateRunError(e.index, "price reached zero") from e
    overflow = np.flatnonzero(~np.isfinite(returns))
    if len(overflow):
        raise DegenerateRunError(int(overflow[0]) + 1, "return overflowed")

    return SimSeries(
        changes=changes,
        prices=prices,
        returns=returns,
        seed=seed,
        config_label=config.label,
        values=values,
        dbars=dbars,
    )


def _check_price(t: int, price: float) -> None:
    if not math.isfinite(price):
        raise DegenerateRunError(t, f"price became {price}")


def _run_news(params: NewsParams, a_path: np.ndarray, b_path: np.ndarray,
              streams: MarketStreams):
    steps = len(a_path)
    shocks = draw_news_shocks(params, streams, steps)
    state = MarketState.initial_news(params)

    changes = np.empty(steps)
    prices = np.empty(steps + 1)
    values = np.empty(steps + 1)
    dbars = np.empty(steps + 1)
    prices[0], values[0], dbars[0] = state.price, state.vbar, state.dbar

    a_list, b_list = a_path.tolist(), b_path.tolist()
    for i in range(steps):
        state, d_t = step_news(state, params, (a_list[i], b_list[i]), shock=shocks[i])
        _check_price(state.t, state.price)
        changes[i] = d_t
        prices[i + 1] = state.price
        values[i + 1] = state.vbar
        dbars[i + 1] = state.dbar
    return changes, prices, values, dbars


def _run_trend(params: TrendParams, a_path: np.ndarray, streams: MarketStreams):
    steps = len(a_path)
    weights = np.asarray(params.omega_dist.sample(streams.weights, steps * params.k), dtype=float)
    weights = weights.reshape(steps, params.k)
    noise = params.noise_sigma * streams.noise.standard_normal(steps)
    state = MarketState.initial_trend(params)

    changes = np.empty(steps)
    prices = np.empty(steps + 1)
    prices[0] = state.price

    a_list, noise_list = a_path.tolist(), noise.tolist()
    for i in range(steps):
        state, d_t = step_trend(state, params, a_list[i],
                                weights=weights[i].tolist(), noise=noise_list[i])
        _check_price(state.t, state.price)
        changes[i] = d_t
        prices[i + 1] = state.price
    return changes, prices

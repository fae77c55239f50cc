"""
Shared fixtures for the news-market test suite.
"""

from pathlib import Path

import numpy as np
import pytest

from news_market.config.settings import config as settings
from news_market.model.distributions import Distribution
from news_market.model.types import CoefficientModel, NewsParams, RegimeConfig, TrendParams

CONFIG_DIR = Path(__file__).resolve().parent.parent / 'configs'


@pytest.fixture(autouse=True)
def serial_workers():
    """Run batches in-process unless a test asks for a pool."""
    previous = settings.get('workers')
    settings.set('workers', 1)
    yield
    settings.set('workers', previous)


@pytest.fixture
def config_dir() -> Path:
    return CONFIG_DIR


@pytest.fixture
def pareto_sample():
    """10^5 draws from Pareto(alpha=3, xmin=1) by inverse-CDF sampling."""
    rng = np.random.default_rng(12345)
    u = 1.0 - rng.random(100_000)
    return u ** (-1.0 / 3.0)


@pytest.fixture
def quiet_config() -> RegimeConfig:
    params = NewsParams(tau=1.0, tau_prime=0.1, sigma_eps=0.0, sigma_nu=0.0, p0=100.0, v0=100.0)
    coefficients = CoefficientModel.direct(Distribution.exponential(0.1), Distribution.exponential(0.3))
    return RegimeConfig(params, coefficients, 50, 'quiet')


@pytest.fixture
def news_config() -> RegimeConfig:
    params = NewsParams(tau=1.0, tau_prime=0.1, sigma_eps=0.1, sigma_nu=1.0, p0=100.0, v0=100.0)
    coefficients = CoefficientModel.direct(Distribution.exponential(0.1), Distribution.exponential(0.3))
    return RegimeConfig(params, coefficients, 2000, 'news')


def trend_config(a: float, omega: float, noise: float, d_init=(1.0,), steps: int = 20,
                 p0: float = 100.0) -> RegimeConfig:
    """Trend regime with degenerate a_t and weights."""
    params = TrendParams(k=len(d_init), omega_dist=Distribution.degenerate(omega),
                         noise_sigma=noise, d_init=tuple(d_init), p0=p0)
    coefficients = CoefficientModel.direct(Distribution.degenerate(a), Distribution.degenerate(0.0))
    return RegimeConfig(params, coefficients, steps, 'trend')


@pytest.fixture
def make_trend_config():
    return trend_config

"""Market model: parameters, random streams, recursions and simulation."""

from news_market.model.distributions import Distribution, DistributionKind
from news_market.model.dynamics import (
    NewsShock, draw_news_shock, draw_news_shocks, sample_coefficient_path,
    sample_coefficients, step_news, step_trend,
)
from news_market.model.kesten import exponential_mean_for_exponent, kesten_exponent
from news_market.model.micro import (
    AgentKind, MicroAgent, aggregate_excess_demand, micro_excess_demand, price_impact,
)
from news_market.model.simulation import returns_from_prices, simulate
from news_market.model.streams import CHANNELS, MarketStreams
from news_market.model.types import (
    CoefficientMode, CoefficientModel, MarketState, NewsParams, RegimeConfig,
    RegimeKind, SimSeries, TrendParams,
)

__all__ = [
    'AgentKind', 'CHANNELS', 'CoefficientMode', 'CoefficientModel', 'Distribution',
    'DistributionKind', 'MarketState', 'MarketStreams', 'MicroAgent', 'NewsParams',
    'NewsShock', 'RegimeConfig', 'RegimeKind', 'SimSeries', 'TrendParams',
    'aggregate_excess_demand', 'draw_news_shock', 'draw_news_shocks',
    'exponential_mean_for_exponent', 'kesten_exponent', 'micro_excess_demand',
    'price_impact', 'returns_from_prices', 'sample_coefficient_path',
    'sample_coefficients', 'simulate', 'step_news', 'step_trend',
]

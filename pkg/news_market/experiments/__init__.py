"""Scenario presets, Monte Carlo batches and regime comparison."""

from news_market.experiments.presets import (
    CLI_ALIASES, DEFAULT_STEPS, PresetName, ScenarioPreset, get_preset,
)
from news_market.experiments.runner import (
    AggregateStatistics, RegimeComparison, ScenarioReport, SeedStatistics,
    aggregate_statistics, analyze_prices, compare_regimes, run_scenario,
)
from news_market.stats.autocorrelation import acf_band

__all__ = [
    'AggregateStatistics', 'CLI_ALIASES', 'DEFAULT_STEPS', 'PresetName', 'RegimeComparison',
    'ScenarioPreset', 'ScenarioReport', 'SeedStatistics', 'acf_band', 'aggregate_statistics',
    'analyze_prices', 'compare_regimes', 'get_preset', 'run_scenario',
]

"""Estimators for the stylized facts of returns."""

from news_market.stats.autocorrelation import AcfResult, acf, acf_band
from news_market.stats.moments import kurtosis
from news_market.stats.summary import SeriesSummary, summarize_series
from news_market.stats.tails import (
    DEFAULT_HILL_SHARE, DEFAULT_MIN_TAIL, PowerLawFit, TailCurve, fit_power_law,
    hill_estimator, hill_for_share, ls_tail_slope, positive_values, tail_survival,
)

__all__ = [
    'AcfResult', 'DEFAULT_HILL_SHARE', 'DEFAULT_MIN_TAIL', 'PowerLawFit', 'SeriesSummary',
    'TailCurve', 'acf', 'acf_band', 'fit_power_law', 'hill_estimator', 'hill_for_share',
    'kurtosis', 'ls_tail_slope', 'positive_values', 'summarize_series', 'tail_survival',
]

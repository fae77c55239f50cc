"""
Per-series block of stylized-fact statistics.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from news_market.core.models import NewsMarketError
from news_market.stats.autocorrelation import AcfResult, acf
from news_market.stats.moments import kurtosis
from news_market.stats.tails import (
    DEFAULT_HILL_SHARE, DEFAULT_MIN_TAIL, PowerLawFit, fit_power_law, hill_for_share,
    ls_tail_slope, tail_survival,
)


@dataclass
class SeriesSummary:
    """Statistics of one return (or price-change) series."""
    n: int
    std: float
    kurtosis: Optional[float] = None
    fit: Optional[PowerLawFit] = None
    hill: Optional[float] = None
    ls_slope: Optional[float] = None
    acf: Optional[AcfResult] = None
    abs_acf: Optional[AcfResult] = None
    issues: List[str] = field(default_factory=list)


def summarize_series(values: Sequence[float], max_lag: int, percent: bool = True,
                     min_tail: int = DEFAULT_MIN_TAIL,
                     max_candidates: Optional[int] = None,
                     hill_share: float = DEFAULT_HILL_SHARE) -> SeriesSummary:
    """
    Compute std, kurtosis, the tail estimates of |values| and both ACFs.

    The tail block holds the KS-selected power-law fit, the Hill estimate
    over the largest ``hill_share`` of the amplitudes and the least-squares
    log-log slope of the survival curve above the fitted xmin.

    A failing estimator (constant series, too short a tail) is recorded in
    ``issues`` and leaves its field None; the others are still computed.

    Args:
        values: Returns or price changes
        max_lag: Largest ACF lag
        percent: Fit the tail of 100*|values|, matching percent-return plots
        min_tail: Smallest admissible tail size
        max_candidates: Cap on scanned cutoffs
        hill_share: Share of largest amplitudes used by the Hill estimator
    """
    x = np.asarray(values, dtype=float)
    summary = SeriesSummary(n=len(x), std=float(np.std(x)))
    amplitudes = np.abs(x) * (100.0 if percent else 1.0)

    try:
        summary.kurtosis = kurtosis(x)
    except NewsMarketError as e:
        summary.issues.append(f"kurtosis: {e}")
    try:
        summary.fit = fit_power_law(amplitudes, min_tail=min_tail, max_candidates=max_candidates)
    except NewsMarketError as e:
        summary.issues.append(f"tail: {e}")
    try:
        summary.hill = hill_for_share(amplitudes, hill_share)
    except NewsMarketError as e:
        summary.issues.append(f"hill: {e}")
    if summary.fit is not None:
        try:
            summary.ls_slope = ls_tail_slope(tail_survival(amplitudes), summary.fit.xmin)
        except NewsMarketError as e:
            summary.issues.append(f"ls_slope: {e}")
    try:
        summary.acf = acf(x, max_lag)
    except NewsMarketError as e:
        summary.issues.append(f"acf: {e}")
    try:
        summary.abs_acf = acf(np.abs(x), max_lag)
    except NewsMarketError as e:
        summary.issues.append(f"abs_acf: {e}")
    return summary

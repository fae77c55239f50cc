"""
Moment statistics.
"""

from typing import Sequence

import numpy as np
from scipy import stats

from news_market.core.models import InsufficientDataError, ZeroVarianceError


def kurtosis(series: Sequence[float]) -> float:
    """
    Pearson (non-excess) kurtosis m4 / m2**2 with 1/n central moments.

    A Gaussian sample gives 3.
    """
    x = np.asarray(series, dtype=float)
    if len(x) < 4:
        raise InsufficientDataError(f"kurtosis needs at least 4 observations, got {len(x)}")
    if np.all(x == x[0]):
        raise ZeroVarianceError("kurtosis of a constant series is undefined")
    return float(stats.kurtosis(x, fisher=False, bias=True))

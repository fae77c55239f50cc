"""
Sample autocorrelation with the white-noise band.
"""

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from news_market.core.models import (
    InsufficientDataError, InvalidParameterError, ZeroVarianceError,
)


def acf_band(n: int) -> float:
    """Two-sided 95% white-noise band 1.96/sqrt(n)."""
    if n < 2:
        raise InvalidParameterError('n', f"band needs at least 2 observations, got {n}")
    return 1.96 / math.sqrt(n)


@dataclass(frozen=True, eq=False)
class AcfResult:
    """
    Autocorrelations at lags 0..H of a series of length n.

    ``band`` is the i.i.d. band 1.96/sqrt(n). ``robust_band`` holds, per lag,
    1.96 times the heteroscedasticity-consistent standard error
    sqrt(sum (c_t c_{t+h})^2) / sum c_t^2 of the centred series c; it stays
    valid for uncorrelated series whose variance clusters.
    """
    lags: np.ndarray
    values: np.ndarray
    n: int
    band: float
    robust_band: Optional[np.ndarray] = None

    @property
    def max_lag(self) -> int:
        return len(self.values) - 1

    def at(self, lag: int) -> float:
        if not 0 <= lag <= self.max_lag:
            raise InvalidParameterError('lag', f"{lag} is outside 0..{self.max_lag}")
        return float(self.values[lag])

    def fraction_inside_band(self, first_lag: int = 1, widen: float = 1.0) -> float:
        """Share of lags first_lag..H with |acf| within ``widen`` times the band."""
        window = np.abs(self.values[first_lag:])
        return float(np.mean(window <= widen * self.band)) if len(window) else 1.0

    def fraction_inside_robust_band(self, first_lag: int = 1, widen: float = 1.0) -> float:
        """Share of lags first_lag..H with |acf| within ``widen`` times the robust band."""
        if self.robust_band is None:
            raise InvalidParameterError('robust_band', "not available for this result")
        window = np.abs(self.values[first_lag:])
        limits = widen * self.robust_band[first_lag:]
        return float(np.mean(window <= limits)) if len(window) else 1.0

    def fraction_above_band(self, first_lag: int = 1) -> float:
        """Share of lags first_lag..H with acf above the band."""
        window = self.values[first_lag:]
        return float(np.mean(window > self.band)) if len(window) else 0.0

    def __eq__(self, other) -> bool:
        if not isinstance(other, AcfResult):
            return NotImplemented
        if (self.robust_band is None) != (other.robust_band is None):
            return False
        return (self.n == other.n and self.band == other.band
                and np.array_equal(self.values, other.values)
                and (self.robust_band is None
                     or np.array_equal(self.robust_band, other.robust_band)))


def acf(series: Sequence[float], max_lag: int) -> AcfResult:
    """
    Biased sample autocorrelation.

    Uses the global mean and the lag-0 sum of squares as the common
    denominator, which keeps every value in [-1, 1].

    Raises:
        InsufficientDataError: If len(series) < max_lag + 2
        ZeroVarianceError: If the series is constant
    """
    x = np.asarray(series, dtype=float)
    if max_lag < 0:
        raise InvalidParameterError('max_lag', f"must be nonnegative, got {max_lag}")
    n = len(x)
    if n < max_lag + 2:
        raise InsufficientDataError(f"series of length {n} is too short for max_lag {max_lag}")
    if np.all(x == x[0]):
        raise ZeroVarianceError("autocorrelation of a constant series is undefined")

    centred = x - x.mean()
    denominator = np.dot(centred, centred)

    values = np.empty(max_lag + 1)
    robust = np.empty(max_lag + 1)
    values[0], robust[0] = 1.0, 0.0
    for h in range(1, max_lag + 1):
        products = centred[:-h] * centred[h:]
        values[h] = products.sum() / denominator
        robust[h] = 1.96 * math.sqrt(np.dot(products, products)) / denominator

    return AcfResult(lags=np.arange(max_lag + 1), values=values, n=n, band=acf_band(n),
                     robust_band=robust)

"""
Tail estimators: empirical survival curves, power-law fits and the Hill estimator.

All exponents here are survival exponents: P(X > x) ~ C x^-alpha. The
matching density exponent is alpha + 1.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from news_market.core.models import InsufficientDataError, InvalidParameterError
from news_market.utils.logging_config import get_logger

logger = get_logger('tails')

DEFAULT_MIN_TAIL = 50
DEFAULT_HILL_SHARE = 0.05


def positive_values(series: Sequence[float]) -> Tuple[np.ndarray, int]:
    """Sorted strictly positive values and the number of dropped entries."""
    x = np.asarray(series, dtype=float).ravel()
    kept = x[x > 0]
    return np.sort(kept), len(x) - len(kept)


@dataclass(frozen=True, eq=False)
class TailCurve:
    """
    Empirical survival function on the distinct positive values.

    At the i-th distinct value the survival is (#values > x) / n; the largest
    value, where that count is zero, gets 1 / (2n) so the curve stays
    plottable on log axes.
    """
    x: np.ndarray
    survival: np.ndarray
    dropped: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'x', np.asarray(self.x, dtype=float))
        object.__setattr__(self, 'survival', np.asarray(self.survival, dtype=float))
        if len(self.x) != len(self.survival):
            raise InvalidParameterError('survival', "needs one probability per abscissa")

    def __len__(self) -> int:
        return len(self.x)

    @property
    def log10_x(self) -> np.ndarray:
        return np.log10(self.x)

    @property
    def log10_survival(self) -> np.ndarray:
        return np.log10(self.survival)


def tail_survival(series: Sequence[float]) -> TailCurve:
    """
    Build the survival curve of the positive part of ``series``.

    Raises:
        InsufficientDataError: If fewer than 2 distinct positive values remain
    """
    x, dropped = positive_values(series)
    values, counts = np.unique(x, return_counts=True)
    if len(values) < 2:
        raise InsufficientDataError(
            f"survival curve needs at least 2 distinct positive values, got {len(values)}"
        )
    n = len(x)
    above = n - np.cumsum(counts)
    survival = above / n
    survival[-1] = 1.0 / (2 * n)
    if dropped:
        logger.debug(f"Dropped {dropped} non-positive values from survival curve")
    return TailCurve(x=values, survival=survival, dropped=dropped)


@dataclass(frozen=True)
class PowerLawFit:
    """Power-law tail fitted above ``xmin``."""
    alpha: float
    xmin: float
    ks: float
    n_tail: int
    n: int

    @property
    def density_exponent(self) -> float:
        return self.alpha + 1.0

    @property
    def scale_constant(self) -> float:
        """C in P(X > x) ~ C x^-alpha, normalised at xmin."""
        return (self.n_tail / self.n) * self.xmin ** self.alpha

    def describe(self) -> str:
        return (f"alpha={self.alpha!r} xmin={self.xmin!r} ks={self.ks!r} "
                f"n_tail={self.n_tail}")


def _fit_above(x: np.ndarray, start: int) -> Tuple[float, float]:
    """Maximum-likelihood exponent and KS distance for the tail x[start:]."""
    xmin = x[start]
    ratios = x[start:] / xmin
    n_tail = len(ratios)
    alpha = n_tail / np.sum(np.log(ratios))

    fitted = 1.0 - ratios ** (-alpha)
    steps = np.arange(n_tail) / n_tail
    ks = max(np.max(np.abs(fitted - steps)), np.max(np.abs(fitted - steps - 1.0 / n_tail)))
    return float(alpha), float(ks)


def fit_power_law(series: Sequence[float], min_tail: int = DEFAULT_MIN_TAIL,
                  max_candidates: Optional[int] = None,
                  max_sigma: Optional[float] = None) -> PowerLawFit:
    """
    Continuous maximum-likelihood power-law fit with KS-minimising cutoff.

    Every distinct observed value leaving at least ``min_tail`` points at or
    above it is a candidate xmin. For each one the exponent is
    n_tail / sum(log(x / xmin)) and the KS distance between the tail's
    empirical CDF and the fitted Pareto CDF is computed; the candidate with
    the smallest distance wins.

    With ``max_sigma`` the scan stops at the first cutoff whose standard
    error alpha / sqrt(n_tail) reaches it, so a far tail that bends away
    from a power law cannot pull xmin out to a few hundred points. If even
    the lowest cutoff is too noisy every candidate stays in play.

    Args:
        series: Sample; non-positive values are ignored
        min_tail: Smallest admissible tail size
        max_candidates: Scan at most this many candidates, evenly spaced by
            rank; None scans all of them
        max_sigma: Largest admissible standard error of alpha; None disables

    Raises:
        InsufficientDataError: Too few positive values or all values identical
    """
    if min_tail < 2:
        raise InvalidParameterError('min_tail', f"must be at least 2, got {min_tail}")
    if max_sigma is not None and max_sigma <= 0:
        raise InvalidParameterError('max_sigma', f"must be positive, got {max_sigma}")
    x, _ = positive_values(series)
    n = len(x)
    if n < min_tail:
        raise InsufficientDataError(f"power-law fit needs {min_tail} positive values, got {n}")
    if x[0] == x[-1]:
        raise InsufficientDataError("power-law fit is undefined when all values are identical")

    values, first = np.unique(x, return_index=True)
    admissible = ((n - first) >= min_tail) & (values < x[-1])
    candidates = first[admissible]
    if len(candidates) == 0:
        raise InsufficientDataError(f"no cutoff leaves {min_tail} distinct-valued tail points")
    if max_candidates is not None and len(candidates) > max_candidates:
        picks = np.unique(np.linspace(0, len(candidates) - 1, max_candidates).round().astype(int))
        candidates = candidates[picks]

    fits = np.array([_fit_above(x, int(start)) for start in candidates])
    alphas, distances = fits[:, 0], fits[:, 1]

    if max_sigma is not None:
        sigmas = alphas / np.sqrt(n - candidates)
        noisy = np.flatnonzero(sigmas >= max_sigma)
        if len(noisy) and noisy[0] > 0:
            keep = noisy[0]
            candidates, alphas, distances = candidates[:keep], alphas[:keep], distances[:keep]
        elif len(noisy):
            logger.warning(f"Every cutoff has alpha standard error >= {max_sigma}; scanning all")

    best = int(np.argmin(distances))
    start, alpha, ks = int(candidates[best]), float(alphas[best]), float(distances[best])
    logger.debug(f"Scanned {len(candidates)} cutoffs; xmin={x[start]} alpha={alpha:.4f} ks={ks:.4f}")
    return PowerLawFit(alpha=alpha, xmin=float(x[start]), ks=ks, n_tail=n - start, n=n)


def hill_estimator(series: Sequence[float], k: int) -> float:
    """
    Hill tail-index estimate from the ``k`` largest values.

    alpha = k / sum_{i=1..k} log(x_(n-i+1) / x_(n-k)), order statistics ascending.

    Raises:
        InvalidParameterError: If k is outside 1..n-1
        InsufficientDataError: If ties make the denominator zero
    """
    x, _ = positive_values(series)
    n = len(x)
    if not 1 <= k < n:
        raise InvalidParameterError('k', f"must satisfy 1 <= k < {n}, got {k}")
    threshold = x[n - k - 1]
    denominator = np.sum(np.log(x[n - k:] / threshold))
    if denominator <= 0:
        raise InsufficientDataError("Hill estimator undefined: top values tie with the threshold")
    return float(k / denominator)


def ls_tail_slope(curve: TailCurve, xmin: float) -> float:
    """
    Least-squares slope of log survival against log x for x >= xmin.

    The slope is negative; its absolute value estimates alpha.

    Raises:
        InsufficientDataError: If fewer than 3 points qualify
    """
    mask = curve.x >= xmin
    if np.count_nonzero(mask) < 3:
        raise InsufficientDataError(
            f"least-squares tail fit needs 3 points above {xmin}, got {np.count_nonzero(mask)}"
        )
    fit = stats.linregress(np.log(curve.x[mask]), np.log(curve.survival[mask]))
    return float(fit.slope)


def hill_for_share(series: Sequence[float], share: float = DEFAULT_HILL_SHARE) -> float:
    """Hill estimate using the largest ``share`` of the positive values (at least one)."""
    if not 0 < share < 1:
        raise InvalidParameterError('share', f"must lie in (0, 1), got {share}")
    x, _ = positive_values(series)
    k = min(max(1, int(round(share * len(x)))), len(x) - 1)
    return hill_estimator(x, k)

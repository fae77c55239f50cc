"""
Tail exponent of the trend-following random-coefficient autoregression.

With K = 1 and a constant weight w, d_t = (a_t w) d_{t-1} + e_t has a
stationary law with P(|d| > x) ~ C x^-mu, where mu > 0 solves
E[(a w)^mu] = 1.
"""

import math

import numpy as np
from scipy.optimize import brentq
from scipy.special import gammaln

from news_market.core.models import InvalidParameterError
from news_market.model.distributions import Distribution, DistributionKind


def exponential_mean_for_exponent(mu: float) -> float:
    """Mean m of an exponential a_t giving tail exponent ``mu`` (w = 1): m = Gamma(1+mu)^(-1/mu)."""
    if not mu > 0:
        raise InvalidParameterError('mu', f"must be positive, got {mu}")
    return math.exp(-gammaln(1.0 + mu) / mu)


def kesten_exponent(a_dist: Distribution, omega: Distribution) -> float:
    """
    Solve E[(a w)^mu] = 1 for mu > 0.

    Supports an exponential or degenerate a_t with a degenerate weight.
    Returns ``inf`` when the moment stays below 1 for every mu (a bounded
    contraction, whose stationary law has no power-law tail).

    Raises:
        InvalidParameterError: For unsupported laws or an explosive process
    """
    if omega.kind is not DistributionKind.DEGENERATE:
        raise InvalidParameterError('omega_dist', "only a degenerate weight is supported")
    w = abs(omega.loc)

    if a_dist.kind is DistributionKind.DEGENERATE:
        product = abs(a_dist.loc) * w
        if product < 1:
            return math.inf
        raise InvalidParameterError('a_dist', f"|a w| = {product} >= 1 does not contract")

    if a_dist.kind is not DistributionKind.EXPONENTIAL:
        raise InvalidParameterError('a_dist', f"unsupported law {a_dist}")
    if w == 0:
        return math.inf

    # log E[(a w)^mu] = mu log(m w) + log Gamma(1 + mu), convex with value 0 at mu = 0
    scale = math.log(a_dist.loc * w)

    def log_moment(mu: float) -> float:
        return mu * scale + gammaln(1.0 + mu)

    # Slope at 0 is E[log(a w)] = log(m w) - Euler gamma; must be negative
    if scale - np.euler_gamma >= 0:
        raise InvalidParameterError('a_dist', "E[log(a w)] >= 0, the recursion is not stationary")

    upper = 1.0
    while log_moment(upper) < 0:
        upper *= 2.0
    return brentq(log_moment, 1e-9, upper, xtol=1e-12)

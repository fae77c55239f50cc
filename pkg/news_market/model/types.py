"""
Parameter and state types of the two-regime market model.
"""

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Deque, Optional, Tuple, Union

import numpy as np

from news_market.core.models import InvalidParameterError
from news_market.model.distributions import Distribution, require_count, require_nonnegative


class CoefficientMode(str, Enum):
    DIRECT = 'direct'
    COMPOSED = 'composed'


class RegimeKind(str, Enum):
    NEWS = 'news'
    TREND = 'trend'


def _require_positive(name: str, value: Optional[float]) -> None:
    if value is None or not np.isfinite(value) or value <= 0:
        raise InvalidParameterError(name, f"must be strictly positive, got {value}")


def _require_probability(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise InvalidParameterError(name, f"must lie in [0, 1], got {value}")


def _require_nonnegative(name: str, value: float) -> None:
    if not np.isfinite(value) or value < 0:
        raise InvalidParameterError(name, f"must be nonnegative, got {value}")


def _require_finite(name: str, value: float) -> None:
    if not np.isfinite(value):
        raise InvalidParameterError(name, f"must be finite, got {value}")


@dataclass(frozen=True)
class CoefficientModel:
    """
    Law of the market coefficients (a_t, b_t).

    Direct mode draws a_t and b_t from their own laws. Composed mode draws the
    agent counts N_t, M_t and returns a_t = alpha*beta*N_t, b_t = gamma*beta*M_t.
    """
    mode: CoefficientMode
    a_dist: Optional[Distribution] = None
    b_dist: Optional[Distribution] = None
    alpha: Optional[float] = None
    gamma: Optional[float] = None
    beta: Optional[float] = None
    n_dist: Optional[Distribution] = None
    m_dist: Optional[Distribution] = None

    def __post_init__(self):
        object.__setattr__(self, 'mode', CoefficientMode(self.mode))
        if self.mode is CoefficientMode.DIRECT:
            require_nonnegative('a_dist', self.a_dist)
            require_nonnegative('b_dist', self.b_dist)
            for name in ('alpha', 'gamma', 'beta', 'n_dist', 'm_dist'):
                if getattr(self, name) is not None:
                    raise InvalidParameterError(name, "only applies to composed coefficients")
        else:
            for name in ('a_dist', 'b_dist'):
                if getattr(self, name) is not None:
                    raise InvalidParameterError(name, "only applies to direct coefficients")
            _require_positive('alpha', self.alpha)
            _require_positive('gamma', self.gamma)
            _require_positive('beta', self.beta)
            require_count('n_dist', self.n_dist)
            require_count('m_dist', self.m_dist)

    @classmethod
    def direct(cls, a_dist: Distribution, b_dist: Distribution) -> 'CoefficientModel':
        return cls(CoefficientMode.DIRECT, a_dist=a_dist, b_dist=b_dist)

    @classmethod
    def composed(cls, alpha: float, gamma: float, beta: float,
                 n_dist: Distribution, m_dist: Distribution) -> 'CoefficientModel':
        return cls(CoefficientMode.COMPOSED, alpha=float(alpha), gamma=float(gamma),
                   beta=float(beta), n_dist=n_dist, m_dist=m_dist)


@dataclass(frozen=True)
class NewsParams:
    """News arrival probabilities, shock sizes and initial conditions."""
    tau: float
    tau_prime: float
    sigma_eps: float
    sigma_nu: float
    p0: float
    v0: float
    dbar0: float = 0.0

    def __post_init__(self):
        _require_probability('tau', self.tau)
        _require_probability('tau_prime', self.tau_prime)
        _require_nonnegative('sigma_eps', self.sigma_eps)
        _require_nonnegative('sigma_nu', self.sigma_nu)
        _require_finite('p0', self.p0)
        _require_finite('v0', self.v0)
        _require_finite('dbar0', self.dbar0)

    @property
    def kind(self) -> RegimeKind:
        return RegimeKind.NEWS


@dataclass(frozen=True)
class TrendParams:
    """
    Trend-following autoregression d_t = a_t * sum_k w_kt d_{t-k} + e_t.

    ``d_init`` holds the K starting changes in chronological order, so its
    last entry is d_0.
    """
    k: int
    omega_dist: Distribution
    noise_sigma: float
    d_init: Tuple[float, ...]
    p0: float = 100.0

    def __post_init__(self):
        if isinstance(self.k, bool) or int(self.k) != self.k or self.k < 1:
            raise InvalidParameterError('K', f"must be a positive integer, got {self.k}")
        if not isinstance(self.omega_dist, Distribution):
            raise InvalidParameterError('omega_dist', "a distribution is required")
        _require_nonnegative('noise_sigma', self.noise_sigma)
        object.__setattr__(self, 'd_init', tuple(float(d) for d in self.d_init))
        if len(self.d_init) != self.k:
            raise InvalidParameterError(
                'd_init', f"needs exactly K={self.k} entries, got {len(self.d_init)}"
            )
        for value in self.d_init:
            _require_finite('d_init', value)
        _require_finite('p0', self.p0)

    @property
    def kind(self) -> RegimeKind:
        return RegimeKind.TREND


@dataclass(frozen=True)
class RegimeConfig:
    """Full parameterization of one market regime."""
    regime: Union[NewsParams, TrendParams]
    coefficients: CoefficientModel
    steps: int
    label: str = ''

    def __post_init__(self):
        if not isinstance(self.regime, (NewsParams, TrendParams)):
            raise InvalidParameterError('regime', "must be news or trend parameters")
        if isinstance(self.steps, bool) or int(self.steps) != self.steps or self.steps < 1:
            raise InvalidParameterError('steps', f"must be a positive integer, got {self.steps}")
        if not self.label:
            object.__setattr__(self, 'label', self.regime.kind.value)
        if self.label != self.label.strip() or any(c in self.label for c in '#\r\n'):
            raise InvalidParameterError(
                'label', f"must be one line without '#' or surrounding spaces, got {self.label!r}")

    @property
    def kind(self) -> RegimeKind:
        return self.regime.kind

    @property
    def p0(self) -> float:
        return self.regime.p0


@dataclass
class MarketState:
    """Mutable state carried through one run."""
    t: int
    price: float
    dbar: float = 0.0
    vbar: float = 0.0
    # Most recent change first: last_changes[0] is d_{t}
    last_changes: Deque[float] = field(default_factory=deque)

    @classmethod
    def initial_news(cls, params: NewsParams) -> 'MarketState':
        return cls(t=0, price=params.p0, dbar=params.dbar0, vbar=params.v0)

    @classmethod
    def initial_trend(cls, params: TrendParams) -> 'MarketState':
        ring = deque(reversed(params.d_init), maxlen=params.k)
        return cls(t=0, price=params.p0, last_changes=ring)


def _frozen(values) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class SimSeries:
    """
    One simulated path.

    ``prices``, ``values`` and ``dbars`` run over t = 0..T; ``changes`` and
    ``returns`` over t = 1..T. Trend-regime paths carry no value or mean
    expectation, so those fields are None.
    """
    changes: np.ndarray
    prices: np.ndarray
    returns: np.ndarray
    seed: int
    config_label: str
    values: Optional[np.ndarray] = None
    dbars: Optional[np.ndarray] = None

    def __post_init__(self):
        for name in ('changes', 'prices', 'returns', 'values', 'dbars'):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, _frozen(value))
        if len(self.prices) != len(self.changes) + 1:
            raise InvalidParameterError('prices', "must hold one more entry than changes")
        if len(self.returns) != len(self.changes):
            raise InvalidParameterError('returns', "must match changes in length")
        for name in ('values', 'dbars'):
            value = getattr(self, name)
            if value is not None and len(value) != len(self.prices):
                raise InvalidParameterError(name, "must match prices in length")

    @property
    def steps(self) -> int:
        return len(self.changes)

    def head(self, n: int) -> 'SimSeries':
        """First ``n`` steps of the path."""
        n = max(0, min(n, self.steps))
        return SimSeries(
            changes=self.changes[:n],
            prices=self.prices[:n + 1],
            returns=self.returns[:n],
            seed=self.seed,
            config_label=self.config_label,
            values=None if self.values is None else self.values[:n + 1],
            dbars=None if self.dbars is None else self.dbars[:n + 1],
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimSeries):
            return NotImplemented
        if (self.seed, self.config_label) != (other.seed, other.config_label):
            return False
        for name in ('changes', 'prices', 'returns', 'values', 'dbars'):
            mine, theirs = getattr(self, name), getattr(other, name)
            if (mine is None) != (theirs is None):
                return False
            if mine is not None and not np.array_equal(mine, theirs):
                return False
        return True

"""
Plain ``key = value`` model configuration files.

Lines may carry ``#`` comments. Distributions are written ``exponential:MEAN``,
``degenerate:VALUE``, ``normal:MEAN:SD`` (trend weights only) or
``poisson:MEAN`` (agent counts only).

Keys and defaults:

    regime        news | trend                              (required)
    steps         path length T                             (required)
    label         run label                                 (default: regime)
    coefficients  direct | composed                         (default: direct)
    a_dist        law of a_t, direct mode                   (required in direct mode)
    tail_exponent trend only: a_t exponential with E[a_t^mu] = 1, in place of a_dist
    b_dist        law of b_t, direct mode                   (required for news; trend default degenerate:0)
    alpha, gamma, beta, n_dist, m_dist                      (required in composed mode)
    tau, tau_prime, sigma_eps, sigma_nu, p0, v0             (required for news)
    dbar0         initial mean expected change              (default 0)
    K, omega_dist, noise_sigma                              (required for trend)
    p0            trend initial price                       (default 100)
    d_init        K comma-separated starting changes, oldest first (default zeros)
    seed          first seed                                (default 0)
    realizations  Monte Carlo realizations                  (default 10)
    max_lag       ACF lag range                             (default 100)

Direct-mode keys are rejected in composed mode and the other way round.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from news_market.config.settings import config as settings
from news_market.core.models import ConfigError, InvalidParameterError
from news_market.model.distributions import Distribution
from news_market.model.kesten import exponential_mean_for_exponent
from news_market.model.types import (
    CoefficientMode, CoefficientModel, NewsParams, RegimeConfig, RegimeKind, TrendParams,
)
from news_market.utils.logging_config import get_logger

logger = get_logger('config_file')

NEWS_KEYS = ('tau', 'tau_prime', 'sigma_eps', 'sigma_nu', 'p0', 'v0')
TREND_KEYS = ('K', 'omega_dist', 'noise_sigma')
COMPOSED_KEYS = ('alpha', 'gamma', 'beta', 'n_dist', 'm_dist')
DIRECT_KEYS = ('a_dist', 'b_dist', 'tail_exponent')
KNOWN_KEYS = frozenset((
    'regime', 'steps', 'label', 'coefficients', 'dbar0', 'd_init',
    'seed', 'realizations', 'max_lag',
) + NEWS_KEYS + TREND_KEYS + COMPOSED_KEYS + DIRECT_KEYS)


@dataclass(frozen=True)
class RunnerSettings:
    """Batch settings carried alongside a model configuration."""
    seed: int = 0
    realizations: int = 10
    max_lag: int = 100


@dataclass(frozen=True)
class ConfigDocument:
    config: RegimeConfig
    settings: RunnerSettings


class _Entries:
    """Parsed ``key -> (value, line)`` pairs with typed accessors."""

    def __init__(self, entries: Dict[str, Tuple[str, int]]):
        self.entries = entries

    def __contains__(self, key: str) -> bool:
        return key in self.entries

    def line(self, key: str) -> Optional[int]:
        return self.entries[key][1] if key in self.entries else None

    def text(self, key: str, default: Optional[str] = None) -> Optional[str]:
        return self.entries[key][0] if key in self.entries else default

    def _convert(self, key: str, convert, default):
        if key not in self.entries:
            return default
        value, line = self.entries[key]
        try:
            return convert(value)
        except (ValueError, InvalidParameterError) as e:
            raise ConfigError(f"malformed value '{value}': {e}", key=key, line=line)

    def number(self, key: str, default: Optional[float] = None) -> Optional[float]:
        return self._convert(key, float, default)

    def integer(self, key: str, default: Optional[int] = None) -> Optional[int]:
        return self._convert(key, int, default)

    def distribution(self, key: str, default: Optional[Distribution] = None) -> Optional[Distribution]:
        return self._convert(key, Distribution.parse, default)

    def numbers(self, key: str, default=None) -> Optional[Tuple[float, ...]]:
        return self._convert(key, lambda v: tuple(float(p) for p in v.split(',')), default)


def _read_entries(text: str) -> _Entries:
    entries: Dict[str, Tuple[str, int]] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise ConfigError("expected 'key = value'", line=line_no)
        key, value = (part.strip() for part in line.split('=', 1))
        if key not in KNOWN_KEYS:
            raise ConfigError("unknown key", key=key, line=line_no)
        if key in entries:
            raise ConfigError(f"duplicate key (first set on line {entries[key][1]})", key=key, line=line_no)
        if not value:
            raise ConfigError("missing value", key=key, line=line_no)
        entries[key] = (value, line_no)
    return _Entries(entries)


def _required_keys(entries: _Entries) -> List[str]:
    required = ['regime', 'steps']
    regime = entries.text('regime')
    mode = entries.text('coefficients', CoefficientMode.DIRECT.value)
    if mode == CoefficientMode.COMPOSED.value:
        required.extend(COMPOSED_KEYS)
    else:
        if 'tail_exponent' not in entries:
            required.append('a_dist')
        if regime != RegimeKind.TREND.value:
            required.append('b_dist')
    if regime == RegimeKind.TREND.value:
        required.extend(TREND_KEYS)
    elif regime == RegimeKind.NEWS.value:
        required.extend(NEWS_KEYS)
    return required


def _choice(entries: _Entries, key: str, enum_type, default=None):
    value = entries.text(key)
    if value is None:
        return default
    try:
        return enum_type(value.lower())
    except ValueError:
        options = ' | '.join(member.value for member in enum_type)
        raise ConfigError(f"expected {options}, got '{value}'", key=key, line=entries.line(key))


def _reject_other_mode(entries: _Entries, mode: CoefficientMode, regime_kind: RegimeKind) -> None:
    """Reject keys that the chosen coefficient mode or regime would ignore."""
    if mode is CoefficientMode.COMPOSED:
        foreign, owner = DIRECT_KEYS, 'direct'
    else:
        foreign, owner = COMPOSED_KEYS, 'composed'
    for key in foreign:
        if key in entries:
            raise ConfigError(f"only applies to {owner} coefficients", key=key, line=entries.line(key))
    if 'tail_exponent' in entries:
        if regime_kind is not RegimeKind.TREND:
            raise ConfigError("only applies to the trend regime", key='tail_exponent',
                              line=entries.line('tail_exponent'))
        if 'a_dist' in entries:
            raise ConfigError("conflicts with a_dist", key='tail_exponent',
                              line=entries.line('tail_exponent'))


def _direct_a(entries: _Entries) -> Distribution:
    exponent = entries.number('tail_exponent')
    if exponent is None:
        return entries.distribution('a_dist')
    if not exponent > 0:
        raise ConfigError(f"must be positive, got {exponent}", key='tail_exponent',
                          line=entries.line('tail_exponent'))
    return Distribution.exponential(exponential_mean_for_exponent(exponent))


def _build(entries: _Entries) -> ConfigDocument:
    regime_kind = _choice(entries, 'regime', RegimeKind)
    mode = _choice(entries, 'coefficients', CoefficientMode, CoefficientMode.DIRECT)
    _reject_other_mode(entries, mode, regime_kind)

    if mode is CoefficientMode.DIRECT:
        default_b = Distribution.degenerate(0.0) if regime_kind is RegimeKind.TREND else None
        coefficients = CoefficientModel.direct(_direct_a(entries),
                                               entries.distribution('b_dist', default_b))
    else:
        coefficients = CoefficientModel.composed(
            entries.number('alpha'), entries.number('gamma'), entries.number('beta'),
            entries.distribution('n_dist'), entries.distribution('m_dist'),
        )

    if regime_kind is RegimeKind.NEWS:
        regime = NewsParams(
            tau=entries.number('tau'), tau_prime=entries.number('tau_prime'),
            sigma_eps=entries.number('sigma_eps'), sigma_nu=entries.number('sigma_nu'),
            p0=entries.number('p0'), v0=entries.number('v0'),
            dbar0=entries.number('dbar0', 0.0),
        )
    else:
        k = entries.integer('K')
        regime = TrendParams(
            k=k, omega_dist=entries.distribution('omega_dist'),
            noise_sigma=entries.number('noise_sigma'),
            d_init=entries.numbers('d_init', (0.0,) * max(k, 0)),
            p0=entries.number('p0', 100.0),
        )

    config = RegimeConfig(regime, coefficients, entries.integer('steps'),
                          entries.text('label', regime_kind.value))

    runner = RunnerSettings(
        seed=entries.integer('seed', 0),
        realizations=entries.integer('realizations', settings.get_realizations()),
        max_lag=entries.integer('max_lag', settings.get_max_lag()),
    )
    if runner.seed < 0:
        raise InvalidParameterError('seed', f"must be nonnegative, got {runner.seed}")
    if runner.realizations < 1:
        raise InvalidParameterError('realizations', f"must be at least 1, got {runner.realizations}")
    if runner.max_lag < 0:
        raise InvalidParameterError('max_lag', f"must be nonnegative, got {runner.max_lag}")
    return ConfigDocument(config, runner)


def parse_config(text: str) -> ConfigDocument:
    """
    Parse and validate a configuration document.

    Raises:
        ConfigError: Unknown key, malformed value, missing required key or an
            invariant violation, naming the key and line where known
    """
    entries = _read_entries(text)
    missing = [key for key in _required_keys(entries) if key not in entries]
    if missing:
        raise ConfigError(f"missing required keys: {', '.join(missing)}")
    try:
        document = _build(entries)
    except InvalidParameterError as e:
        key = e.field if e.field in KNOWN_KEYS else None
        raise ConfigError(str(e), key=key, line=entries.line(key) if key else None) from e
    logger.debug(f"Parsed configuration '{document.config.label}' ({document.config.kind.value})")
    return document


def load_config(path: Union[str, Path]) -> ConfigDocument:
    """Read and parse a configuration file."""
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e.strerror or e}")
    return parse_config(text)


def render_config(config: RegimeConfig, runner: Optional[RunnerSettings] = None) -> str:
    """Render a configuration that ``parse_config`` maps back exactly."""
    runner = runner or RunnerSettings()
    lines = [
        f"regime = {config.kind.value}",
        f"label = {config.label}",
        f"steps = {config.steps}",
        f"coefficients = {config.coefficients.mode.value}",
    ]
    coefficients = config.coefficients
    if coefficients.mode is CoefficientMode.DIRECT:
        lines.append(f"a_dist = {coefficients.a_dist.render()}")
        lines.append(f"b_dist = {coefficients.b_dist.render()}")
    else:
        lines.extend([
            f"alpha = {coefficients.alpha!r}",
            f"gamma = {coefficients.gamma!r}",
            f"beta = {coefficients.beta!r}",
            f"n_dist = {coefficients.n_dist.render()}",
            f"m_dist = {coefficients.m_dist.render()}",
        ])

    regime = config.regime
    if isinstance(regime, NewsParams):
        lines.extend(f"{key} = {getattr(regime, key)!r}" for key in NEWS_KEYS)
        lines.append(f"dbar0 = {regime.dbar0!r}")
    else:
        lines.extend([
            f"K = {regime.k}",
            f"omega_dist = {regime.omega_dist.render()}",
            f"noise_sigma = {regime.noise_sigma!r}",
            f"d_init = {', '.join(repr(d) for d in regime.d_init)}",
            f"p0 = {regime.p0!r}",
        ])

    lines.extend([
        f"seed = {runner.seed}",
        f"realizations = {runner.realizations}",
        f"max_lag = {runner.max_lag}",
    ])
    return '\n'.join(lines) + '\n'

"""
Named scenarios and their controls.
"""

from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

from news_market.core.models import InvalidParameterError
from news_market.model.distributions import Distribution
from news_market.model.kesten import exponential_mean_for_exponent
from news_market.model.types import CoefficientModel, NewsParams, RegimeConfig, TrendParams

DEFAULT_STEPS = 20000
KESTEN_TARGET_EXPONENT = 3.0


class PresetName(str, Enum):
    FIG2_NEWS = 'fig2_news'
    FIG3_CONSTANT_VALUE = 'fig3_constant_value'
    KESTEN_TREND = 'kesten_trend'
    QUIET_CONTROL = 'quiet_control'

    @classmethod
    def resolve(cls, name: str) -> 'PresetName':
        """Accept a full preset name or its short CLI alias."""
        key = name.strip().lower()
        if key in CLI_ALIASES:
            return CLI_ALIASES[key]
        try:
            return cls(key)
        except ValueError:
            known = ', '.join(sorted(CLI_ALIASES))
            raise InvalidParameterError('preset', f"unknown preset '{name}' (expected {known})")


CLI_ALIASES = {
    'fig2': PresetName.FIG2_NEWS,
    'fig3': PresetName.FIG3_CONSTANT_VALUE,
    'kesten': PresetName.KESTEN_TREND,
    'quiet': PresetName.QUIET_CONTROL,
}


@dataclass(frozen=True)
class ScenarioPreset:
    name: PresetName
    config: RegimeConfig

    def with_steps(self, steps: Optional[int]) -> 'ScenarioPreset':
        if steps is None or steps == self.config.steps:
            return self
        return replace(self, config=replace(self.config, steps=steps))


def _news_coefficients() -> CoefficientModel:
    return CoefficientModel.direct(Distribution.exponential(0.1), Distribution.exponential(0.3))


def _fig2(steps: int) -> RegimeConfig:
    params = NewsParams(tau=1.0, tau_prime=0.1, sigma_eps=0.1, sigma_nu=1.0, p0=100.0, v0=100.0)
    return RegimeConfig(params, _news_coefficients(), steps, PresetName.FIG2_NEWS.value)


def _fig3(steps: int) -> RegimeConfig:
    params = NewsParams(tau=1.0, tau_prime=0.0, sigma_eps=0.1, sigma_nu=1.0, p0=100.0, v0=100.0)
    return RegimeConfig(params, _news_coefficients(), steps, PresetName.FIG3_CONSTANT_VALUE.value)


def _quiet(steps: int) -> RegimeConfig:
    params = NewsParams(tau=1.0, tau_prime=0.1, sigma_eps=0.0, sigma_nu=0.0, p0=100.0, v0=100.0)
    return RegimeConfig(params, _news_coefficients(), steps, PresetName.QUIET_CONTROL.value)


def _kesten(steps: int) -> RegimeConfig:
    # Purely speculative market (M_t = 0); a_t's mean targets a cubic tail
    mean = exponential_mean_for_exponent(KESTEN_TARGET_EXPONENT)
    coefficients = CoefficientModel.direct(Distribution.exponential(mean),
                                           Distribution.degenerate(0.0))
    params = TrendParams(k=1, omega_dist=Distribution.degenerate(1.0), noise_sigma=0.1,
                         d_init=(0.0,), p0=1000.0)
    return RegimeConfig(params, coefficients, steps, PresetName.KESTEN_TREND.value)


_BUILDERS = {
    PresetName.FIG2_NEWS: _fig2,
    PresetName.FIG3_CONSTANT_VALUE: _fig3,
    PresetName.KESTEN_TREND: _kesten,
    PresetName.QUIET_CONTROL: _quiet,
}


def get_preset(name, steps: Optional[int] = None) -> ScenarioPreset:
    """
    Build a preset by name or alias.

    Args:
        name: PresetName, full name or CLI alias
        steps: Path length; defaults to 20000
    """
    preset_name = name if isinstance(name, PresetName) else PresetName.resolve(name)
    config = _BUILDERS[preset_name](steps or DEFAULT_STEPS)
    return ScenarioPreset(preset_name, config)

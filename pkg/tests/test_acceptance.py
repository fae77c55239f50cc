"""
Statistical acceptance runs over the default seed set 0..9.

Each batch takes seconds to a minute; run with ``pytest -m slow``.
"""

import numpy as np
import pytest

from news_market.experiments import compare_regimes, get_preset, run_scenario
from news_market.model.simulation import simulate
from news_market.stats import acf

pytestmark = pytest.mark.slow

SEEDS = 10
STEPS = 20000
MAX_LAG = 100


@pytest.fixture(scope='module')
def fig2_report():
    return run_scenario(get_preset('fig2'), realizations=SEEDS, base_seed=0,
                        max_lag=MAX_LAG, steps=STEPS)


@pytest.fixture(scope='module')
def fig3_report():
    return run_scenario(get_preset('fig3'), realizations=SEEDS, base_seed=0,
                        max_lag=MAX_LAG, steps=STEPS)


@pytest.fixture(scope='module')
def kesten_report():
    return run_scenario(get_preset('kesten'), realizations=SEEDS, base_seed=0,
                        max_lag=MAX_LAG, steps=STEPS)


def shuffled_inside_band(config, seed: int) -> float:
    """Band share of the return ACF after a seeded permutation of the returns."""
    returns = simulate(config, seed).returns
    shuffled = np.random.default_rng(1000 + seed).permutation(returns)
    return acf(shuffled, MAX_LAG).fraction_inside_band(first_lag=2, widen=1.5)


class TestNewsRegime:

    def test_no_degenerate_seeds(self, fig2_report):
        assert fig2_report.aggregate.degenerate_seeds == []
        assert len(fig2_report.per_seed) == SEEDS

    def test_cubic_tail(self, fig2_report):
        fit = fig2_report.pooled_fit
        assert 2.2 <= fit.alpha <= 4.0
        assert 0.5 <= fit.xmin <= 3.0
        assert fit.alpha / np.sqrt(fit.n_tail) < 0.012

    def test_heavy_tails(self, fig2_report):
        aggregate = fig2_report.aggregate
        assert aggregate.kurtosis_median >= 10
        assert 10 <= aggregate.kurtosis_mean <= 60

    def test_uncorrelated_returns(self, fig2_report):
        assert fig2_report.aggregate.uncorrelated_seeds_robust >= 8

    def test_shuffled_returns_sit_inside_white_noise_band(self):
        config = get_preset('fig2', steps=STEPS).config
        for seed in range(3):
            assert shuffled_inside_band(config, seed) >= 0.9

    def test_pooled_tail_estimators_agree_on_heavy_tail(self, fig2_report):
        assert fig2_report.pooled_hill > 2.0
        assert fig2_report.pooled_ls_slope < -1.5

    def test_volatility_clustering(self, fig2_report):
        assert fig2_report.aggregate.abs_acf_above_band >= 0.9

    def test_return_calibration(self, fig2_report):
        assert 0.003 <= fig2_report.aggregate.return_std_median <= 0.03


class TestConstantValue:

    def test_excess_volatility(self, fig3_report):
        assert fig3_report.aggregate.degenerate_seeds == []
        for entry in fig3_report.per_seed:
            assert entry.return_std > 0

    def test_values_constant(self):
        config = get_preset('fig3', steps=STEPS).config
        for seed in range(SEEDS):
            assert np.all(simulate(config, seed).values == 100.0)

    def test_same_stylized_facts(self, fig3_report):
        assert fig3_report.aggregate.uncorrelated_seeds_robust >= 8
        assert fig3_report.aggregate.abs_acf_above_band >= 0.9


class TestRegimeContrast:

    def test_trend_amplitudes_forget_faster(self, fig2_report, kesten_report):
        comparison = compare_regimes(fig2_report, kesten_report, 50)
        assert comparison.difference > 0
        assert comparison.value_b < 0.05

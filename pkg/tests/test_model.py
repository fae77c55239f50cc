"""
Tests for the market model: parameters, streams, recursions and simulation.
"""

import math
from dataclasses import replace

import numpy as np
import pytest

from news_market.core.models import (
    DegenerateRunError, InsufficientDataError, InvalidParameterError, ZeroPriceError,
)
from news_market.model import (
    CoefficientModel, Distribution, MarketState, MarketStreams, MicroAgent, NewsParams,
    NewsShock, RegimeConfig, TrendParams, aggregate_excess_demand, draw_news_shocks,
    exponential_mean_for_exponent, kesten_exponent, micro_excess_demand, price_impact,
    returns_from_prices, sample_coefficient_path, sample_coefficients, simulate,
    step_news, step_trend,
)
from news_market.model.streams import channel_generator
from news_market.stats.tails import hill_estimator


class TestDistribution:

    def test_parse_and_render(self):
        dist = Distribution.parse('exponential:0.1')
        assert dist == Distribution.exponential(0.1)
        assert Distribution.parse(dist.render()) == dist
        assert Distribution.parse('normal:1.0:0.5') == Distribution.normal(1.0, 0.5)

    def test_parse_rejects_unknown_kind(self):
        with pytest.raises(ValueError, match='unknown distribution'):
            Distribution.parse('gamma:1.0')

    def test_parse_rejects_wrong_parameter_count(self):
        with pytest.raises(ValueError):
            Distribution.parse('exponential:0.1:0.2')

    def test_exponential_mean_must_be_positive(self):
        with pytest.raises(InvalidParameterError):
            Distribution.exponential(0.0)

    def test_direct_mode_rejects_signed_laws(self):
        with pytest.raises(InvalidParameterError) as info:
            CoefficientModel.direct(Distribution.normal(0.0, 1.0), Distribution.exponential(0.3))
        assert info.value.field == 'a_dist'

    def test_composed_mode_requires_counts(self):
        with pytest.raises(InvalidParameterError) as info:
            CoefficientModel.composed(1.0, 2.0, 0.1, Distribution.exponential(5.0),
                                      Distribution.degenerate(0.0))
        assert info.value.field == 'n_dist'

    def test_composed_mode_rejects_direct_laws(self):
        model = CoefficientModel.composed(1.0, 2.0, 0.1, Distribution.poisson(5.0),
                                          Distribution.poisson(3.0))
        with pytest.raises(InvalidParameterError) as info:
            replace(model, b_dist=Distribution.exponential(0.3))
        assert info.value.field == 'b_dist'

    def test_direct_mode_rejects_agent_counts(self):
        model = CoefficientModel.direct(Distribution.exponential(0.1), Distribution.exponential(0.3))
        with pytest.raises(InvalidParameterError) as info:
            replace(model, n_dist=Distribution.poisson(5.0))
        assert info.value.field == 'n_dist'


class TestParameters:

    def test_tau_out_of_range(self):
        with pytest.raises(InvalidParameterError) as info:
            NewsParams(tau=1.5, tau_prime=0.1, sigma_eps=0.1, sigma_nu=1.0, p0=100.0, v0=100.0)
        assert info.value.field == 'tau'

    def test_negative_sigma(self):
        with pytest.raises(InvalidParameterError):
            NewsParams(tau=1.0, tau_prime=0.1, sigma_eps=-0.1, sigma_nu=1.0, p0=100.0, v0=100.0)

    def test_trend_needs_k_initial_changes(self):
        with pytest.raises(InvalidParameterError) as info:
            TrendParams(k=2, omega_dist=Distribution.degenerate(1.0), noise_sigma=0.1, d_init=(0.0,))
        assert info.value.field == 'd_init'

    def test_trend_k_positive(self):
        with pytest.raises(InvalidParameterError) as info:
            TrendParams(k=0, omega_dist=Distribution.degenerate(1.0), noise_sigma=0.1, d_init=())
        assert info.value.field == 'K'

    def test_steps_positive(self, quiet_config):
        with pytest.raises(InvalidParameterError):
            RegimeConfig(quiet_config.regime, quiet_config.coefficients, 0)

    def test_label_defaults_to_regime(self, quiet_config):
        config = RegimeConfig(quiet_config.regime, quiet_config.coefficients, 10)
        assert config.label == 'news'

    def test_trend_ring_is_most_recent_first(self):
        params = TrendParams(k=2, omega_dist=Distribution.degenerate(1.0), noise_sigma=0.0,
                             d_init=(1.0, 2.0))
        state = MarketState.initial_trend(params)
        assert list(state.last_changes) == [2.0, 1.0]


class TestStreams:

    def test_same_seed_same_draws(self):
        a = channel_generator(3, 'noise').standard_normal(5)
        b = channel_generator(3, 'noise').standard_normal(5)
        assert np.array_equal(a, b)

    def test_channels_are_independent(self):
        a = channel_generator(3, 'noise').standard_normal(5)
        b = channel_generator(3, 'weights').standard_normal(5)
        assert not np.array_equal(a, b)

    def test_negative_seed_rejected(self):
        with pytest.raises(InvalidParameterError) as info:
            MarketStreams.from_seed(-1)
        assert info.value.field == 'seed'

    def test_unknown_channel_rejected(self):
        with pytest.raises(InvalidParameterError):
            channel_generator(0, 'volume')


class TestSampleCoefficients:

    def test_exponential_means(self):
        model = CoefficientModel.direct(Distribution.exponential(0.1), Distribution.exponential(0.3))
        a, b = sample_coefficient_path(model, np.random.default_rng(0), 1_000_000)
        assert np.mean(a) == pytest.approx(0.1, rel=0.01)
        assert np.mean(b) == pytest.approx(0.3, rel=0.01)
        assert a.min() >= 0 and b.min() >= 0

    def test_scalar_draws_are_fresh(self):
        model = CoefficientModel.direct(Distribution.exponential(0.1), Distribution.exponential(0.3))
        rng = np.random.default_rng(1)
        assert sample_coefficients(model, rng) != sample_coefficients(model, rng)

    def test_degenerate_is_exact(self):
        model = CoefficientModel.direct(Distribution.degenerate(0.1), Distribution.degenerate(0.3))
        rng = np.random.default_rng(0)
        for _ in range(5):
            assert sample_coefficients(model, rng) == (0.1, 0.3)

    def test_composed_identity(self):
        model = CoefficientModel.composed(1.0, 2.0, 0.1, Distribution.degenerate(5),
                                          Distribution.degenerate(0))
        assert sample_coefficients(model, np.random.default_rng(0)) == (0.5, 0.0)
        a, b = sample_coefficient_path(model, np.random.default_rng(0), 10)
        assert np.all(a == 1.0 * 0.1 * 5.0)
        assert np.all(b == 0.0)

    def test_composed_poisson_counts_scale(self):
        model = CoefficientModel.composed(1.0, 2.0, 0.1, Distribution.poisson(4.0),
                                          Distribution.poisson(2.0))
        a, b = sample_coefficient_path(model, np.random.default_rng(2), 1000)
        # a / (alpha * beta) recovers integer agent counts
        assert np.allclose(a / 0.1, np.round(a / 0.1))
        assert np.allclose(b / 0.2, np.round(b / 0.2))


class TestStepNews:

    @pytest.fixture
    def params(self):
        return NewsParams(tau=1.0, tau_prime=0.0, sigma_eps=0.1, sigma_nu=1.0, p0=100.0, v0=100.0)

    def test_no_news_no_movement(self):
        params = NewsParams(tau=1.0, tau_prime=1.0, sigma_eps=0.0, sigma_nu=0.0, p0=100.0, v0=100.0)
        state = MarketState.initial_news(params)
        streams = MarketStreams.from_seed(0)
        for _ in range(20):
            state, d_t = step_news(state, params, (0.1, 0.3), rng=streams)
            assert d_t == 0.0
            assert state.price == 100.0

    def test_hand_evaluated_steps(self, params):
        state = MarketState.initial_news(params)
        state, d_1 = step_news(state, params, (0.1, 0.3), shock=NewsShock(True, 0.1, False, 0.0))
        assert state.dbar == pytest.approx(0.1)
        assert d_1 == pytest.approx(0.01)
        assert state.price == pytest.approx(100.01)

        state, d_2 = step_news(state, params, (0.1, 0.3), shock=NewsShock(True, -0.2, False, 0.0))
        assert state.dbar == pytest.approx(-0.1)
        assert d_2 == pytest.approx(-0.013)
        assert state.price == pytest.approx(99.997)
        assert state.t == 2

    def test_requires_streams_or_shock(self, params):
        with pytest.raises(InvalidParameterError):
            step_news(MarketState.initial_news(params), params, (0.1, 0.3))

    def test_expectation_bookkeeping(self, news_config):
        seed = 4
        series = simulate(news_config, seed)
        params = news_config.regime
        shocks = draw_news_shocks(params, MarketStreams.from_seed(seed), news_config.steps)

        dbar, vbar = params.dbar0, params.v0
        for i in range(news_config.steps):
            if shocks.speculator_news[i]:
                dbar += shocks.eps[i]
            if shocks.investor_news[i]:
                vbar += shocks.nu[i]
        assert series.dbars[-1] == dbar
        assert series.values[-1] == vbar


class TestStepTrend:

    def test_zero_weights_leave_the_noise(self, make_trend_config):
        config = make_trend_config(a=0.5, omega=0.0, noise=0.1, steps=200)
        series = simulate(config, 9)
        expected = 0.1 * channel_generator(9, 'noise').standard_normal(200)
        assert np.array_equal(series.changes, expected)

    def test_geometric_decay(self, make_trend_config):
        series = simulate(make_trend_config(a=0.5, omega=1.0, noise=0.0), 0)
        for t, d_t in enumerate(series.changes, start=1):
            assert d_t == 2.0 ** -t

    def test_contraction_ratio(self, make_trend_config):
        series = simulate(make_trend_config(a=0.8, omega=0.5, noise=0.0, steps=30), 0)
        ratios = series.changes[1:] / series.changes[:-1]
        assert np.allclose(ratios, 0.4, rtol=1e-12)

    def test_injected_draws(self):
        params = TrendParams(k=2, omega_dist=Distribution.degenerate(1.0), noise_sigma=0.0,
                             d_init=(1.0, 2.0))
        state = MarketState.initial_trend(params)
        state, d_t = step_trend(state, params, 0.5, weights=[0.5, 0.25], noise=0.1)
        # 0.5 * (0.5 * 2.0 + 0.25 * 1.0) + 0.1
        assert d_t == pytest.approx(0.725)
        assert list(state.last_changes) == [pytest.approx(0.725), 2.0]
        assert state.price == pytest.approx(100.725)


class TestKestenExponent:

    def test_cubic_mean(self):
        assert exponential_mean_for_exponent(3.0) == pytest.approx(6.0 ** (-1.0 / 3.0), rel=1e-12)

    def test_solves_moment_condition(self):
        mean = exponential_mean_for_exponent(3.0)
        mu = kesten_exponent(Distribution.exponential(mean), Distribution.degenerate(1.0))
        assert mu == pytest.approx(3.0, abs=1e-6)

    def test_bounded_contraction_has_no_power_tail(self):
        assert kesten_exponent(Distribution.degenerate(0.5), Distribution.degenerate(1.0)) == math.inf

    def test_explosive_rejected(self):
        with pytest.raises(InvalidParameterError):
            kesten_exponent(Distribution.degenerate(1.5), Distribution.degenerate(1.0))

    @pytest.mark.slow
    def test_hill_tail_of_changes(self):
        from news_market.experiments.presets import get_preset
        config = get_preset('kesten', steps=100_000).config
        series = simulate(config, 0)
        magnitudes = np.abs(series.changes)
        alpha = hill_estimator(magnitudes, k=len(magnitudes) // 20)
        assert 2.5 <= alpha <= 3.5


class TestSimulate:

    def test_deterministic(self, news_config):
        assert simulate(news_config, 7) == simulate(news_config, 7)

    def test_shorter_run_is_not_a_prefix(self, news_config):
        short = simulate(replace(news_config, steps=500), 3)
        long = simulate(news_config, 3)
        assert short.prices[0] == long.prices[0]
        assert not np.array_equal(short.prices, long.prices[:501])

    def test_seeds_differ(self, news_config):
        assert not np.array_equal(simulate(news_config, 1).prices, simulate(news_config, 2).prices)

    def test_lengths_and_returns(self, news_config):
        series = simulate(news_config, 0)
        assert len(series.prices) == len(series.changes) + 1 == news_config.steps + 1
        assert len(series.returns) == news_config.steps
        assert np.allclose(series.returns, series.changes / series.prices[:-1], rtol=1e-12)

    def test_accumulation_identity(self, news_config):
        series = simulate(news_config, 3)
        total = math.fsum(series.changes)
        tolerance = 1e-9 * (1 + abs(series.prices[0]) + np.sum(np.abs(series.changes)))
        assert abs(series.prices[-1] - (series.prices[0] + total)) <= tolerance

    def test_arrays_are_read_only(self, news_config):
        series = simulate(news_config, 0)
        with pytest.raises(ValueError):
            series.prices[0] = 1.0

    def test_quiet_returns_are_zero(self, quiet_config):
        series = simulate(quiet_config, 0)
        assert np.all(series.returns == 0.0)
        assert np.all(series.prices == 100.0)

    def test_constant_value_when_no_value_news(self, news_config):
        params = NewsParams(tau=1.0, tau_prime=0.0, sigma_eps=0.1, sigma_nu=1.0, p0=100.0, v0=100.0)
        series = simulate(RegimeConfig(params, news_config.coefficients, 500), 0)
        assert np.all(series.values == 100.0)
        assert np.std(series.returns) > 0

    def test_trend_series_has_no_value_paths(self, make_trend_config):
        series = simulate(make_trend_config(a=0.5, omega=1.0, noise=0.1), 0)
        assert series.values is None and series.dbars is None

    def test_head(self, news_config):
        head = simulate(news_config, 0).head(10)
        assert head.steps == 10
        assert len(head.prices) == len(head.values) == 11

    def test_zero_price_is_degenerate(self, make_trend_config):
        with pytest.raises(DegenerateRunError) as info:
            simulate(make_trend_config(a=0.0, omega=1.0, noise=0.0, d_init=(0.0,), p0=0.0), 0)
        assert info.value.step == 0

    def test_overflow_is_degenerate(self, make_trend_config):
        with pytest.raises(DegenerateRunError) as info:
            simulate(make_trend_config(a=10.0, omega=1.0, noise=0.0, steps=1000), 0)
        assert 300 <= info.value.step <= 310


class TestReturnsFromPrices:

    def test_one_step(self):
        assert returns_from_prices([100.0, 101.0]).tolist() == [0.01]

    def test_constant(self):
        assert returns_from_prices([100.0, 100.0, 100.0]).tolist() == [0.0, 0.0]

    def test_zero_denominator(self):
        with pytest.raises(ZeroPriceError) as info:
            returns_from_prices([100.0, 0.0, 50.0])
        assert info.value.index == 1

    def test_too_few_prices(self):
        with pytest.raises(InsufficientDataError):
            returns_from_prices([100.0])


class TestMicroDemand:

    def test_empty_market(self):
        assert micro_excess_demand([], 100.0) == 0.0

    def test_symmetric_speculators_cancel(self):
        agents = [MicroAgent.speculator(1.0, 1.0), MicroAgent.speculator(1.0, -1.0)]
        assert micro_excess_demand(agents, 100.0) == 0.0

    def test_single_investor(self):
        assert micro_excess_demand([MicroAgent.investor(2.0, 110.0)], 100.0) == 20.0

    def test_sensitivity_must_be_positive(self):
        with pytest.raises(InvalidParameterError) as info:
            MicroAgent.investor(0.0, 100.0)
        assert info.value.field == 'gamma'

    def test_micro_matches_aggregate(self):
        rng = np.random.default_rng(2024)
        for _ in range(200):
            n, m = rng.integers(0, 101, size=2)
            alpha, gamma = rng.uniform(0.1, 5.0, size=2)
            price = rng.uniform(50.0, 150.0)
            expectations = rng.normal(0.0, 1.0, size=n)
            values = rng.normal(100.0, 10.0, size=m)
            agents = ([MicroAgent.speculator(alpha, d) for d in expectations]
                      + [MicroAgent.investor(gamma, v) for v in values])
            dbar = float(np.mean(expectations)) if n else 0.0
            vbar = float(np.mean(values)) if m else 0.0
            expected = aggregate_excess_demand(alpha, int(n), dbar, gamma, int(m), vbar, price)
            assert micro_excess_demand(agents, price) == pytest.approx(expected, rel=1e-9, abs=1e-9)

    def test_trend_speculator(self):
        agent = MicroAgent.speculator_from_trend(2.0, [0.5, 0.25], [2.0, 4.0], noise=0.1)
        assert agent.expectation == pytest.approx(2.1)
        assert agent.demand(100.0) == pytest.approx(4.2)

    def test_price_impact(self):
        assert price_impact(10.0, 0.1) == pytest.approx(1.0)
        with pytest.raises(InvalidParameterError):
            price_impact(10.0, 0.0)

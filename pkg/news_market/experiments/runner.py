"""
Monte Carlo batches over seeds and their aggregation.
"""

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np

from news_market.config.settings import config as settings
from news_market.core.models import (
    DegenerateRunError, InsufficientDataError, InvalidParameterError, NewsMarketError,
)
from news_market.experiments.presets import ScenarioPreset
from news_market.model.simulation import returns_from_prices, simulate
from news_market.model.types import RegimeConfig, RegimeKind, SimSeries
from news_market.stats.autocorrelation import AcfResult, acf_band
from news_market.stats.summary import SeriesSummary, summarize_series
from news_market.stats.tails import (
    PowerLawFit, TailCurve, fit_power_law, hill_for_share, ls_tail_slope, tail_survival,
)
from news_market.utils.logging_config import get_logger

logger = get_logger('runner')

RETURNS = 'returns'
CHANGES = 'changes'

# A seed counts as uncorrelated when this share of lags 2..H sits inside the widened band
UNCORRELATED_FIRST_LAG = 2
UNCORRELATED_WIDEN = 1.5
UNCORRELATED_SHARE = 0.9


@dataclass
class SeedStatistics:
    """Statistics of one realization; ``summary`` is None for degenerate runs."""
    seed: int
    series_kind: str
    summary: Optional[SeriesSummary] = None
    degenerate_step: Optional[int] = None
    error: Optional[str] = None

    @property
    def return_std(self) -> Optional[float]:
        return self.summary.std if self.summary else None

    @property
    def kurtosis(self) -> Optional[float]:
        return self.summary.kurtosis if self.summary else None

    @property
    def fit(self) -> Optional[PowerLawFit]:
        return self.summary.fit if self.summary else None

    @property
    def returns_acf(self) -> Optional[AcfResult]:
        return self.summary.acf if self.summary else None

    @property
    def abs_acf(self) -> Optional[AcfResult]:
        return self.summary.abs_acf if self.summary else None

    @property
    def issues(self) -> List[str]:
        issues = list(self.summary.issues) if self.summary else []
        if self.error:
            issues.insert(0, self.error)
        return issues

    @property
    def is_degenerate(self) -> bool:
        return self.degenerate_step is not None

    def returns_inside_band(self, widen: float = 1.0) -> Optional[float]:
        """Share of return-ACF lags 1..H within the (widened) white-noise band."""
        acf = self.returns_acf
        return acf.fraction_inside_band(1, widen) if acf else None

    def abs_above_band(self) -> Optional[float]:
        acf = self.abs_acf
        return acf.fraction_above_band(1) if acf else None

    def is_uncorrelated(self, robust: bool = False) -> Optional[bool]:
        """
        Whether the return ACF passes the uncorrelated-returns rule.

        ``robust`` measures lags against the heteroscedasticity-consistent
        band instead of 1.96/sqrt(n).
        """
        acf = self.returns_acf
        if acf is None:
            return None
        if robust:
            share = acf.fraction_inside_robust_band(UNCORRELATED_FIRST_LAG, UNCORRELATED_WIDEN)
        else:
            share = acf.fraction_inside_band(UNCORRELATED_FIRST_LAG, UNCORRELATED_WIDEN)
        return share >= UNCORRELATED_SHARE


@dataclass
class AggregateStatistics:
    """Cross-seed summary; every field is recomputable from the per-seed entries."""
    seeds_used: int
    degenerate_seeds: List[int]
    band: Optional[float]
    kurtosis_median: Optional[float] = None
    kurtosis_iqr: Optional[float] = None
    kurtosis_mean: Optional[float] = None
    alpha_median: Optional[float] = None
    alpha_iqr: Optional[float] = None
    alpha_mean: Optional[float] = None
    return_std_median: Optional[float] = None
    return_std_mean: Optional[float] = None
    mean_returns_acf: Optional[List[float]] = None
    mean_abs_acf: Optional[List[float]] = None
    returns_acf_inside_band: Optional[float] = None
    abs_acf_above_band: Optional[float] = None
    uncorrelated_seeds: Optional[int] = None
    uncorrelated_seeds_robust: Optional[int] = None


@dataclass
class ScenarioReport:
    """Per-seed and aggregated statistics of a multi-realization experiment."""
    preset: str
    label: str
    series_kind: str
    steps: int
    realizations: int
    base_seed: int
    max_lag: int
    per_seed: List[SeedStatistics]
    aggregate: AggregateStatistics
    pooled_fit: Optional[PowerLawFit] = None
    pooled_hill: Optional[float] = None
    pooled_ls_slope: Optional[float] = None
    pooled_issues: List[str] = field(default_factory=list)
    # Plot payloads, not part of the report document
    pooled_tail: Optional[TailCurve] = None
    path_head: Optional[SimSeries] = None

    def mean_abs_acf_at(self, lag: int) -> float:
        curve = self.aggregate.mean_abs_acf
        if not 0 <= lag <= self.max_lag:
            raise InvalidParameterError('lag', f"{lag} is outside 0..{self.max_lag} of '{self.label}'")
        if curve is None:
            raise InsufficientDataError(f"'{self.label}' has no absolute-series ACF")
        return curve[lag]


@dataclass(frozen=True)
class RegimeComparison:
    label_a: str
    label_b: str
    lag: int
    value_a: float
    value_b: float
    difference: float


def _quartiles(values: Sequence[float]) -> Tuple[Optional[float], Optional[float], Optional[float]]:
    """Median, interquartile range and mean; Nones for an empty input."""
    if not values:
        return None, None, None
    ordered = np.sort(np.asarray(values, dtype=float))
    q1, median, q3 = np.percentile(ordered, [25, 50, 75])
    return float(median), float(q3 - q1), math.fsum(ordered) / len(ordered)


def _mean_curve(curves: List[np.ndarray]) -> Optional[List[float]]:
    if not curves:
        return None
    return [math.fsum(c[lag] for c in curves) / len(curves) for lag in range(len(curves[0]))]


def aggregate_statistics(per_seed: Sequence[SeedStatistics], steps: int) -> AggregateStatistics:
    """
    Fold per-seed statistics into the aggregate block.

    Entries are taken in seed order and summed with ``math.fsum``, so any
    permutation of ``per_seed`` gives identical aggregates.
    """
    ordered = sorted(per_seed, key=lambda s: s.seed)
    usable = [s for s in ordered if not s.is_degenerate]

    returns_curves = [s.returns_acf.values for s in usable if s.returns_acf is not None]
    abs_curves = [s.abs_acf.values for s in usable if s.abs_acf is not None]
    band = acf_band(steps) if steps >= 2 else None

    kurt = _quartiles([s.kurtosis for s in usable if s.kurtosis is not None])
    alpha = _quartiles([s.fit.alpha for s in usable if s.fit is not None])
    std = _quartiles([s.return_std for s in usable])

    inside = [s.returns_inside_band() for s in usable if s.returns_acf is not None]
    nominal = [s.is_uncorrelated() for s in usable if s.returns_acf is not None]
    robust = [s.is_uncorrelated(robust=True) for s in usable
              if s.returns_acf is not None and s.returns_acf.robust_band is not None]
    mean_abs = _mean_curve(abs_curves)
    above = None
    if mean_abs is not None and band is not None and len(mean_abs) > 1:
        above = sum(1 for v in mean_abs[1:] if v > band) / (len(mean_abs) - 1)

    return AggregateStatistics(
        seeds_used=len(usable),
        degenerate_seeds=[s.seed for s in ordered if s.is_degenerate],
        band=band,
        kurtosis_median=kurt[0], kurtosis_iqr=kurt[1], kurtosis_mean=kurt[2],
        alpha_median=alpha[0], alpha_iqr=alpha[1], alpha_mean=alpha[2],
        return_std_median=std[0], return_std_mean=std[2],
        mean_returns_acf=_mean_curve(returns_curves),
        mean_abs_acf=mean_abs,
        returns_acf_inside_band=math.fsum(inside) / len(inside) if inside else None,
        abs_acf_above_band=above,
        uncorrelated_seeds=sum(nominal) if nominal else None,
        uncorrelated_seeds_robust=sum(robust) if robust else None,
    )


def analysed_values(series: SimSeries, kind: RegimeKind) -> np.ndarray:
    """Returns for the news regime, price changes for the trend regime."""
    return series.returns if kind is RegimeKind.NEWS else series.changes


def _run_seed(config: RegimeConfig, seed: int, max_lag: int, min_tail: int,
              max_candidates: Optional[int], head_length: int, hill_share: float):
    """Simulate and summarise one seed (module level so worker processes can pickle it)."""
    kind = RETURNS if config.kind is RegimeKind.NEWS else CHANGES
    try:
        series = simulate(config, seed)
    except DegenerateRunError as e:
        logger.warning(f"Seed {seed} of '{config.label}' is degenerate: {e}")
        return SeedStatistics(seed, kind, degenerate_step=e.step, error=str(e)), None, None

    values = analysed_values(series, config.kind)
    summary = summarize_series(values, max_lag, percent=kind == RETURNS,
                               min_tail=min_tail, max_candidates=max_candidates,
                               hill_share=hill_share)
    amplitudes = np.abs(values) * (100.0 if kind == RETURNS else 1.0)
    logger.debug(f"Seed {seed} of '{config.label}': std={summary.std:.6g} issues={len(summary.issues)}")
    return SeedStatistics(seed, kind, summary), amplitudes, series.head(head_length)


def _fit_pooled(report: ScenarioReport, pooled: np.ndarray, min_tail: int,
                max_candidates: Optional[int]) -> None:
    """Tail estimates of the amplitudes pooled over every usable seed."""
    try:
        report.pooled_fit = fit_power_law(pooled, min_tail=min_tail, max_candidates=max_candidates,
                                          max_sigma=settings.get_pooled_tail_sigma())
    except NewsMarketError as e:
        report.pooled_issues.append(f"tail: {e}")
    try:
        report.pooled_hill = hill_for_share(pooled, settings.get_hill_fraction())
    except NewsMarketError as e:
        report.pooled_issues.append(f"hill: {e}")
    try:
        report.pooled_tail = tail_survival(pooled)
    except NewsMarketError as e:
        report.pooled_issues.append(f"survival: {e}")
    if report.pooled_fit is not None and report.pooled_tail is not None:
        try:
            report.pooled_ls_slope = ls_tail_slope(report.pooled_tail, report.pooled_fit.xmin)
        except NewsMarketError as e:
            report.pooled_issues.append(f"ls_slope: {e}")


def run_scenario(preset: ScenarioPreset, realizations: Optional[int] = None, base_seed: int = 0,
                 max_lag: Optional[int] = None, steps: Optional[int] = None,
                 min_tail: Optional[int] = None, max_candidates: Optional[int] = -1,
                 workers: Optional[int] = None) -> ScenarioReport:
    """
    Run ``realizations`` independent simulations of a preset and aggregate them.

    Seeds are base_seed..base_seed+realizations-1. Degenerate seeds are
    reported, not fatal. Results are folded in seed order, so the report does
    not depend on ``workers``.

    Args:
        preset: Scenario to run
        realizations: Number of seeds (default 10)
        base_seed: First seed
        max_lag: ACF lag range (default 100)
        steps: Path length override
        min_tail: Smallest power-law tail (default 50)
        max_candidates: Cutoff-scan cap; -1 takes the configured default,
            None scans every distinct value
        workers: Worker processes; default discovered from the machine
    """
    realizations = settings.get_realizations() if realizations is None else realizations
    max_lag = settings.get_max_lag() if max_lag is None else max_lag
    min_tail = settings.get_min_tail() if min_tail is None else min_tail
    if max_candidates == -1:
        max_candidates = settings.get_tail_candidates()
    if realizations < 1:
        raise InvalidParameterError('realizations', f"must be at least 1, got {realizations}")
    if base_seed < 0:
        raise InvalidParameterError('seed', f"must be nonnegative, got {base_seed}")

    preset = preset.with_steps(steps)
    config = preset.config
    seeds = list(range(base_seed, base_seed + realizations))
    head_length = settings.get_head_length()
    workers = min(workers or settings.get_workers(), realizations)

    logger.info(f"Running '{config.label}': {realizations} seeds x {config.steps} steps on {workers} worker(s)")
    start_time = time.time()

    args = ([config] * realizations, seeds, [max_lag] * realizations, [min_tail] * realizations,
            [max_candidates] * realizations, [head_length] * realizations,
            [settings.get_hill_fraction()] * realizations)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            outcomes = list(executor.map(_run_seed, *args))
    else:
        outcomes = [_run_seed(*task) for task in zip(*args)]

    per_seed = [outcome[0] for outcome in outcomes]
    report = ScenarioReport(
        preset=preset.name.value,
        label=config.label,
        series_kind=RETURNS if config.kind is RegimeKind.NEWS else CHANGES,
        steps=config.steps,
        realizations=realizations,
        base_seed=base_seed,
        max_lag=max_lag,
        per_seed=per_seed,
        aggregate=aggregate_statistics(per_seed, config.steps),
        path_head=outcomes[0][2],
    )

    samples = [outcome[1] for outcome in outcomes if outcome[1] is not None]
    if samples:
        pooled = np.concatenate(samples)
        _fit_pooled(report, pooled, min_tail, max_candidates)

    logger.info(f"Finished '{config.label}' in {time.time() - start_time:.2f}s "
                f"({len(report.aggregate.degenerate_seeds)} degenerate seed(s))")
    return report


def compare_regimes(report_a: ScenarioReport, report_b: ScenarioReport, lag: int) -> RegimeComparison:
    """Cross-seed mean absolute-series ACF of two reports at ``lag`` and a minus b."""
    value_a = report_a.mean_abs_acf_at(lag)
    value_b = report_b.mean_abs_acf_at(lag)
    return RegimeComparison(report_a.label, report_b.label, lag, value_a, value_b, value_a - value_b)


def analyze_prices(prices: Sequence[float], max_lag: Optional[int] = None,
                   min_tail: Optional[int] = None,
                   max_candidates: Optional[int] = -1) -> SeriesSummary:
    """Returns-based statistics of an empirical (or previously simulated) price series."""
    max_lag = settings.get_max_lag() if max_lag is None else max_lag
    min_tail = settings.get_min_tail() if min_tail is None else min_tail
    if max_candidates == -1:
        max_candidates = settings.get_tail_candidates()
    returns = returns_from_prices(prices)
    return summarize_series(returns, max_lag, percent=True, min_tail=min_tail,
                            max_candidates=max_candidates,
                            hill_share=settings.get_hill_fraction())

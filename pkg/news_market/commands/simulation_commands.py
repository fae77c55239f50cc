"""
Commands that run the market model: single paths and preset batches.
"""

from dataclasses import replace
from typing import Any, Dict, List

from news_market.core.models import BaseCommand, CommandResult
from news_market.experiments.presets import CLI_ALIASES, get_preset
from news_market.experiments.runner import ScenarioReport, run_scenario
from news_market.formats.config_file import load_config
from news_market.formats.writers import write_report, write_series
from news_market.model.simulation import simulate
from news_market.utils.logging_config import get_logger


def _fmt(value) -> str:
    return 'n/a' if value is None else f"{value:.6g}"


class SimulateCommand(BaseCommand):
    """Run one configured path and write it as a series file (simulate command)."""

    def __init__(self):
        self.logger = get_logger('simulate')

    def execute(self, options: Dict[str, Any]) -> CommandResult:
        """Execute simulate command."""
        document = load_config(options['config'])
        config = document.config
        if options.get('steps') is not None:
            config = replace(config, steps=options['steps'])
        seed = options.get('seed')
        if seed is None:
            seed = document.settings.seed

        series = simulate(config, seed)
        path = write_series(series, options['out'])
        return CommandResult(
            success=True,
            output=f"simulate: {config.label} seed={seed} steps={series.steps} -> {path}"
        )

    def get_help(self) -> str:
        """Get help text for simulate command."""
        return "simulate --config FILE [--seed N] [--steps T] --out PATH - Run one series"

    def get_name(self) -> str:
        return 'simulate'


class ScenarioCommand(BaseCommand):
    """Run a preset over many seeds and write the report directory (scenario command)."""

    def __init__(self):
        self.logger = get_logger('scenario')

    def execute(self, options: Dict[str, Any]) -> CommandResult:
        """Execute scenario command."""
        preset = get_preset(options['preset'], options.get('steps'))
        report = run_scenario(
            preset,
            realizations=options.get('realizations'),
            base_seed=options.get('seed') or 0,
            max_lag=options.get('max_lag'),
        )
        written = write_report(report, options['out'])
        lines = self._summary_lines(report)
        lines.extend(f"  wrote {path}" for path in written)
        return CommandResult(success=True, output="\n".join(lines))

    @staticmethod
    def _summary_lines(report: ScenarioReport) -> List[str]:
        aggregate = report.aggregate
        lines = [
            f"scenario: {report.label} ({report.realizations} seeds x {report.steps} steps, "
            f"{report.series_kind})",
            f"  seeds used: {aggregate.seeds_used}",
            f"  kurtosis median: {_fmt(aggregate.kurtosis_median)}",
            f"  tail exponent median: {_fmt(aggregate.alpha_median)}",
            f"  std median: {_fmt(aggregate.return_std_median)}",
        ]
        if aggregate.degenerate_seeds:
            seeds = ', '.join(str(s) for s in aggregate.degenerate_seeds)
            lines.append(f"  degenerate seeds: {seeds}")
        if report.pooled_fit is not None:
            lines.append(f"  pooled fit: {report.pooled_fit.describe()}")
        if report.pooled_hill is not None:
            lines.append(f"  pooled hill: {_fmt(report.pooled_hill)}")
        if report.pooled_ls_slope is not None:
            lines.append(f"  pooled ls slope: {_fmt(report.pooled_ls_slope)}")
        if aggregate.uncorrelated_seeds is not None:
            lines.append(f"  uncorrelated seeds: {aggregate.uncorrelated_seeds} "
                         f"(robust band: {aggregate.uncorrelated_seeds_robust})")
        return lines

    def get_help(self) -> str:
        """Get help text for scenario command."""
        presets = '|'.join(CLI_ALIASES)
        return (f"scenario --preset {{{presets}}} [--realizations R] [--seed N] [--steps T] "
                f"[--max-lag H] --out DIR - Run a preset batch")

    def get_name(self) -> str:
        return 'scenario'

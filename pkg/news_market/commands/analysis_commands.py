"""
Commands that compute stylized-fact statistics of user-supplied price files.
"""

from typing import Any, Dict

import numpy as np

from news_market.config.settings import config as settings
from news_market.core.models import BaseCommand, CommandResult
from news_market.experiments.runner import analyze_prices
from news_market.formats.prices import read_price_file
from news_market.formats.writers import write_analysis
from news_market.model.simulation import returns_from_prices
from news_market.stats.tails import fit_power_law
from news_market.utils.logging_config import get_logger


class AnalyzeCommand(BaseCommand):
    """Compute returns, ACFs, kurtosis and the tail estimates of a price column (analyze command)."""

    def __init__(self):
        self.logger = get_logger('analyze')

    def execute(self, options: Dict[str, Any]) -> CommandResult:
        """Execute analyze command."""
        table = read_price_file(options['input'], options['column'])
        summary = analyze_prices(table.prices, max_lag=options.get('max_lag'),
                                 min_tail=options.get('min_tail'))
        path = write_analysis(summary, options['out'], source=str(options['input']),
                              column=table.column, rows=len(table))

        lines = [f"analyze: {len(table)} rows from column '{table.column}' -> {path}"]
        if summary.kurtosis is not None:
            lines.append(f"  kurtosis: {summary.kurtosis:.6g}")
        if summary.fit is not None:
            lines.append(f"  tail: {summary.fit.describe()}")
        if summary.hill is not None:
            lines.append(f"  hill: {summary.hill:.6g}")
        if summary.ls_slope is not None:
            lines.append(f"  ls slope: {summary.ls_slope:.6g}")
        for issue in summary.issues:
            self.logger.warning(f"{options['input']}: {issue}")
            lines.append(f"  skipped {issue}")
        return CommandResult(success=True, output="\n".join(lines))

    def get_help(self) -> str:
        """Get help text for analyze command."""
        return ("analyze --input FILE --column NAME [--max-lag H] [--min-tail M] --out PATH"
                " - Statistics of an empirical price series")

    def get_name(self) -> str:
        return 'analyze'


class FitTailCommand(BaseCommand):
    """Fit a power law to absolute percent returns of a price column (fit-tail command)."""

    def __init__(self):
        self.logger = get_logger('fit_tail')

    def execute(self, options: Dict[str, Any]) -> CommandResult:
        """Execute fit-tail command."""
        table = read_price_file(options['input'], options['column'])
        min_tail = options.get('min_tail')
        if min_tail is None:
            min_tail = settings.get_min_tail()

        amplitudes = np.abs(returns_from_prices(table.prices)) * 100.0
        fit = fit_power_law(amplitudes, min_tail=min_tail,
                            max_candidates=settings.get_tail_candidates())
        return CommandResult(success=True, output=fit.describe())

    def get_help(self) -> str:
        """Get help text for fit-tail command."""
        return "fit-tail --input FILE --column NAME [--min-tail M] - Power-law tail fit"

    def get_name(self) -> str:
        return 'fit-tail'

"""
Runtime settings for the news-market toolkit.
"""

import os
from typing import Any, Optional

import psutil


class SimulatorConfig:
    """Configuration manager for runtime defaults."""

    def __init__(self):
        # Default settings
        self.defaults = {
            'realizations': 10,
            'max_lag': 100,
            'min_tail': 50,
            'tail_candidates': 1000,
            'pooled_tail_sigma': 0.012,
            'hill_fraction': 0.05,
            'head_length': 500,
            'workers': None,
            'log_level': 'INFO',
            'colored_output': True,
        }
        self._apply_environment()

    def _apply_environment(self) -> None:
        """Apply NEWS_MARKET_* environment overrides."""
        level = os.environ.get('NEWS_MARKET_LOG_LEVEL')
        if level:
            self.set('log_level', level.upper())
        workers = os.environ.get('NEWS_MARKET_WORKERS')
        if workers and workers.isdigit() and int(workers) > 0:
            self.set('workers', int(workers))

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value."""
        return self.defaults.get(key, default)

    def set(self, key: str, value: Any) -> None:
        """Set configuration value."""
        self.defaults[key] = value

    def get_realizations(self) -> int:
        """Get the default number of Monte Carlo realizations."""
        return self.get('realizations')

    def get_max_lag(self) -> int:
        """Get the default ACF lag range."""
        return self.get('max_lag')

    def get_min_tail(self) -> int:
        """Get the minimum tail size for power-law fits."""
        return self.get('min_tail')

    def get_tail_candidates(self) -> Optional[int]:
        """Get the cap on scanned power-law cutoffs (None scans all)."""
        return self.get('tail_candidates')

    def get_pooled_tail_sigma(self) -> Optional[float]:
        """Get the alpha standard-error cap for pooled scenario fits."""
        return self.get('pooled_tail_sigma')

    def get_hill_fraction(self) -> float:
        """Get the share of largest values the Hill estimator uses."""
        return self.get('hill_fraction')

    def get_head_length(self) -> int:
        return self.get('head_length')

    def get_workers(self) -> int:
        """Get the worker count for batch runs, discovering cores when unset."""
        workers = self.get('workers')
        if workers:
            return int(workers)
        return psutil.cpu_count(logical=False) or 1

    def get_log_level(self) -> str:
        """Get logging level."""
        return self.get('log_level')

    def is_colored_output_enabled(self) -> bool:
        """Check if colored diagnostics are enabled."""
        return self.get('colored_output')


# Global configuration instance
config = SimulatorConfig()

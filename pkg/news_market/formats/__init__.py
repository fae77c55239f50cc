"""Configuration files, price-file ingestion and output writers."""

from news_market.formats.config_file import (
    ConfigDocument, RunnerSettings, load_config, parse_config, render_config,
)
from news_market.formats.prices import PriceTable, ingest_prices, read_price_file
from news_market.formats.writers import (
    format_number, read_document, read_report, write_analysis, write_report, write_series,
)

__all__ = [
    'ConfigDocument', 'PriceTable', 'RunnerSettings', 'format_number', 'ingest_prices',
    'load_config', 'parse_config', 'read_document', 'read_price_file', 'read_report',
    'render_config', 'write_analysis', 'write_report', 'write_series',
]

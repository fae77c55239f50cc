"""
Ingestion of delimited price files.
"""

import io
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Tuple, Union

import numpy as np
import pandas as pd

from news_market.core.models import PriceTableError
from news_market.utils.logging_config import get_logger

logger = get_logger('prices')


@dataclass(frozen=True, eq=False)
class PriceTable:
    """Ordered (label, price) rows; labels come from the first column."""
    labels: Tuple[str, ...]
    prices: np.ndarray
    column: str

    def __len__(self) -> int:
        return len(self.prices)


def ingest_prices(text: str, column: str) -> PriceTable:
    """
    Parse comma-separated text with a header row and pick one price column.

    Rows are numbered from 1 after the header in error messages. Blank lines
    inside the table are rows with an empty price and are rejected; blank
    lines after the last row are ignored.

    Raises:
        PriceTableError: Missing column, non-numeric cell or fewer than 2 rows
    """
    try:
        frame = pd.read_csv(io.StringIO(text.rstrip() + '\n'), dtype=str, keep_default_na=False,
                            skip_blank_lines=False)
    except pd.errors.EmptyDataError:
        raise PriceTableError("input has no header row")
    except pd.errors.ParserError as e:
        raise PriceTableError(f"malformed delimited text: {e}")

    if column not in frame.columns:
        available = ', '.join(str(c) for c in frame.columns)
        raise PriceTableError(f"missing column '{column}' (available: {available})")

    prices = []
    for row, cell in enumerate(frame[column].tolist(), start=1):
        cell = cell.strip() if isinstance(cell, str) else ''
        if not cell:
            raise PriceTableError(f"empty price in column '{column}'", row=row)
        try:
            value = float(cell)
        except ValueError:
            raise PriceTableError(f"non-numeric price '{cell}' in column '{column}'", row=row)
        if not math.isfinite(value):
            raise PriceTableError(f"non-finite price '{cell}' in column '{column}'", row=row)
        prices.append(value)

    if len(prices) < 2:
        raise PriceTableError(f"at least 2 price rows are required, got {len(prices)}")

    first = frame.columns[0]
    if first == column:
        labels = tuple(str(i) for i in range(1, len(prices) + 1))
    else:
        labels = tuple(str(v) for v in frame[first].tolist())

    logger.info(f"Ingested {len(prices)} rows from column '{column}'")
    return PriceTable(labels=labels, prices=np.array(prices), column=column)


def read_price_file(path: Union[str, Path], column: str) -> PriceTable:
    """Read a delimited price file from disk."""
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise PriceTableError(f"cannot read {path}: {e.strerror or e}")
    return ingest_prices(text, column)

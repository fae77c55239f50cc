"""
Serialization of simulated series, scenario reports and plot tables.

Delimited files use a comma separator, a header row, LF line endings and
UTF-8; numbers are written in shortest round-trip form. Report documents
start with a ``schema=1`` line followed by a JSON body.
"""

import json
from dataclasses import asdict
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import numpy as np
import pandas as pd

from news_market.core.models import OutputError, ReportFormatError
from news_market.experiments.runner import (
    AggregateStatistics, ScenarioReport, SeedStatistics,
)
from news_market.stats.autocorrelation import AcfResult
from news_market.stats.summary import SeriesSummary
from news_market.stats.tails import PowerLawFit
from news_market.utils.logging_config import get_logger

logger = get_logger('writers')

SCHEMA_LINE = 'schema=1'
REPORT_FILE = 'report.txt'
TAIL_FILE = 'tail_curve.csv'
ACF_FILE = 'acf.csv'
HEAD_FILE = 'path_head.csv'

SERIES_COLUMNS = ['t', 'price', 'value', 'dbar', 'change', 'return']

PathLike = Union[str, Path]


def format_number(value: Optional[float]) -> str:
    """Shortest decimal that reads back to the same double; '' for None."""
    if value is None:
        return ''
    return repr(float(value))


def _write_frame(frame: pd.DataFrame, destination: PathLike) -> Path:
    path = Path(destination)
    try:
        frame.to_csv(path, index=False, lineterminator='\n', encoding='utf-8')
    except OSError as e:
        raise OutputError(str(path), e.strerror or str(e))
    return path


def _write_document(document: Dict[str, Any], destination: PathLike) -> Path:
    path = Path(destination)
    body = json.dumps(document, indent=2, sort_keys=True)
    try:
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(f"{SCHEMA_LINE}\n{body}\n")
    except OSError as e:
        raise OutputError(str(path), e.strerror or str(e))
    return path


def read_document(source: PathLike) -> Dict[str, Any]:
    """Read a ``schema=1`` document."""
    try:
        text = Path(source).read_text(encoding='utf-8')
    except OSError as e:
        raise ReportFormatError(f"cannot read {source}: {e.strerror or e}")
    first, _, body = text.partition('\n')
    if first.strip() != SCHEMA_LINE:
        raise ReportFormatError(f"expected '{SCHEMA_LINE}' on the first line, got '{first.strip()}'")
    try:
        return json.loads(body)
    except json.JSONDecodeError as e:
        raise ReportFormatError(f"malformed report body: {e}")


def write_series(series, destination: PathLike) -> Path:
    """
    Write one simulated path as t,price,value,dbar,change,return.

    Row 0 holds the initial price, value and mean expectation with empty
    change and return; value and dbar stay empty for trend-regime paths.
    """
    steps = series.steps

    def column(values, offset):
        if values is None:
            return [''] * (steps + 1)
        return [''] * offset + [format_number(v) for v in values]

    frame = pd.DataFrame({
        't': list(range(steps + 1)),
        'price': column(series.prices, 0),
        'value': column(series.values, 0),
        'dbar': column(series.dbars, 0),
        'change': column(series.changes, 1),
        'return': column(series.returns, 1),
    }, columns=SERIES_COLUMNS)
    path = _write_frame(frame, destination)
    logger.info(f"Wrote {steps + 1} rows of '{series.config_label}' (seed {series.seed}) to {path}")
    return path


def _fit_dict(fit: Optional[PowerLawFit]) -> Optional[Dict[str, Any]]:
    if fit is None:
        return None
    document = asdict(fit)
    document['scale_constant'] = fit.scale_constant
    return document


def _fit_from(document: Optional[Dict[str, Any]]) -> Optional[PowerLawFit]:
    if document is None:
        return None
    return PowerLawFit(alpha=document['alpha'], xmin=document['xmin'], ks=document['ks'],
                       n_tail=document['n_tail'], n=document['n'])


def _acf_dict(result: Optional[AcfResult]) -> Optional[Dict[str, Any]]:
    if result is None:
        return None
    document = {'n': result.n, 'band': result.band, 'values': [float(v) for v in result.values]}
    if result.robust_band is not None:
        document['robust_band'] = [float(v) for v in result.robust_band]
    return document


def _acf_from(document: Optional[Dict[str, Any]]) -> Optional[AcfResult]:
    if document is None:
        return None
    values = np.array(document['values'], dtype=float)
    robust = document.get('robust_band')
    return AcfResult(lags=np.arange(len(values)), values=values,
                     n=document['n'], band=document['band'],
                     robust_band=None if robust is None else np.array(robust, dtype=float))


def summary_to_dict(summary: SeriesSummary) -> Dict[str, Any]:
    return {
        'n': summary.n,
        'std': summary.std,
        'kurtosis': summary.kurtosis,
        'fit': _fit_dict(summary.fit),
        'hill': summary.hill,
        'ls_slope': summary.ls_slope,
        'acf': _acf_dict(summary.acf),
        'abs_acf': _acf_dict(summary.abs_acf),
        'issues': list(summary.issues),
    }


def summary_from_dict(document: Dict[str, Any]) -> SeriesSummary:
    return SeriesSummary(
        n=document['n'], std=document['std'], kurtosis=document['kurtosis'],
        fit=_fit_from(document['fit']), hill=document.get('hill'),
        ls_slope=document.get('ls_slope'), acf=_acf_from(document['acf']),
        abs_acf=_acf_from(document['abs_acf']), issues=list(document['issues']),
    )


def report_to_dict(report: ScenarioReport) -> Dict[str, Any]:
    """Document form of a report (plot payloads excluded)."""
    per_seed = []
    for entry in report.per_seed:
        per_seed.append({
            'seed': entry.seed,
            'series_kind': entry.series_kind,
            'return_std': entry.return_std,
            'degenerate_step': entry.degenerate_step,
            'error': entry.error,
            'summary': summary_to_dict(entry.summary) if entry.summary else None,
        })
    return {
        'kind': 'scenario',
        'preset': report.preset,
        'label': report.label,
        'series_kind': report.series_kind,
        'steps': report.steps,
        'realizations': report.realizations,
        'base_seed': report.base_seed,
        'max_lag': report.max_lag,
        'per_seed': per_seed,
        'aggregate': asdict(report.aggregate),
        'pooled_fit': _fit_dict(report.pooled_fit),
        'pooled_hill': report.pooled_hill,
        'pooled_ls_slope': report.pooled_ls_slope,
        'pooled_issues': list(report.pooled_issues),
    }


def report_from_dict(document: Dict[str, Any]) -> ScenarioReport:
    if document.get('kind') != 'scenario':
        raise ReportFormatError(f"not a scenario report (kind={document.get('kind')!r})")
    try:
        per_seed = [
            SeedStatistics(
                seed=entry['seed'], series_kind=entry['series_kind'],
                summary=summary_from_dict(entry['summary']) if entry['summary'] else None,
                degenerate_step=entry['degenerate_step'], error=entry['error'],
            )
            for entry in document['per_seed']
        ]
        return ScenarioReport(
            preset=document['preset'], label=document['label'],
            series_kind=document['series_kind'], steps=document['steps'],
            realizations=document['realizations'], base_seed=document['base_seed'],
            max_lag=document['max_lag'], per_seed=per_seed,
            aggregate=AggregateStatistics(**document['aggregate']),
            pooled_fit=_fit_from(document['pooled_fit']),
            pooled_hill=document.get('pooled_hill'),
            pooled_ls_slope=document.get('pooled_ls_slope'),
            pooled_issues=list(document['pooled_issues']),
        )
    except (KeyError, TypeError) as e:
        raise ReportFormatError(f"report is missing or has malformed field: {e}")


def _tail_table(report: ScenarioReport) -> pd.DataFrame:
    curve = report.pooled_tail
    if curve is None:
        return pd.DataFrame(columns=['x', 'survival', 'log10_x', 'log10_survival'])
    return pd.DataFrame({
        'x': [format_number(v) for v in curve.x],
        'survival': [format_number(v) for v in curve.survival],
        'log10_x': [format_number(v) for v in curve.log10_x],
        'log10_survival': [format_number(v) for v in curve.log10_survival],
    })


def _acf_table(report: ScenarioReport) -> pd.DataFrame:
    aggregate = report.aggregate
    lags = range(report.max_lag + 1)

    def curve(values):
        return [format_number(v) for v in values] if values is not None else [''] * len(lags)

    band = format_number(aggregate.band)
    neg_band = format_number(-aggregate.band) if aggregate.band is not None else ''
    return pd.DataFrame({
        'lag': list(lags),
        'acf_returns': curve(aggregate.mean_returns_acf),
        'acf_abs': curve(aggregate.mean_abs_acf),
        'band': [band] * len(lags),
        'neg_band': [neg_band] * len(lags),
    })


def _head_table(report: ScenarioReport) -> pd.DataFrame:
    head = report.path_head
    if head is None:
        return pd.DataFrame(columns=['t', 'price', 'value', 'return_percent'])
    return pd.DataFrame({
        't': list(range(head.steps + 1)),
        'price': [format_number(v) for v in head.prices],
        'value': [format_number(v) for v in head.values] if head.values is not None
        else [''] * (head.steps + 1),
        'return_percent': [''] + [format_number(100.0 * r) for r in head.returns],
    })


def write_report(report: ScenarioReport, destination: PathLike) -> List[Path]:
    """
    Write the report document and its plot tables into a directory.

    Files: report.txt (schema=1 + JSON), tail_curve.csv, acf.csv and
    path_head.csv (the first seed's opening steps).
    """
    directory = Path(destination)
    try:
        directory.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise OutputError(str(directory), e.strerror or str(e))

    written = [
        _write_document(report_to_dict(report), directory / REPORT_FILE),
        _write_frame(_tail_table(report), directory / TAIL_FILE),
        _write_frame(_acf_table(report), directory / ACF_FILE),
        _write_frame(_head_table(report), directory / HEAD_FILE),
    ]
    logger.info(f"Wrote report for '{report.label}' ({len(report.per_seed)} seeds) to {directory}")
    return written


def read_report(source: PathLike) -> ScenarioReport:
    """Re-read a report document (plot payloads are not restored)."""
    path = Path(source)
    if path.is_dir():
        path = path / REPORT_FILE
    return report_from_dict(read_document(path))


def write_analysis(summary: SeriesSummary, destination: PathLike, source: str,
                   column: str, rows: int) -> Path:
    """Write the statistics of an empirical price series."""
    document = {
        'kind': 'analysis',
        'input': source,
        'column': column,
        'rows': rows,
        'summary': summary_to_dict(summary),
    }
    return _write_document(document, destination)

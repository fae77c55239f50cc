"""
Command-line tests through click's CliRunner.
"""

import numpy as np
import pandas as pd
import pytest
from click.testing import CliRunner

from news_market import __version__
from news_market.core.command_processor import CommandProcessor
from news_market.core.command_registry import CommandRegistry
from news_market.core.models import CommandNotFoundError
from news_market.interfaces.cli_interface import cli


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, ['--log-level', 'ERROR', *args])


@pytest.fixture
def pareto_prices(tmp_path):
    """Price file whose percent returns have a cubic tail above 1."""
    rng = np.random.default_rng(99)
    magnitudes = (1.0 - rng.random(5000)) ** (-1.0 / 3.0)
    signs = np.where(rng.random(5000) < 0.5, -1.0, 1.0)
    prices = 100.0 * np.cumprod(np.concatenate([[1.0], 1.0 + signs * magnitudes / 100.0]))
    path = tmp_path / 'prices.csv'
    pd.DataFrame({'date': np.arange(len(prices)), 'close': prices}).to_csv(path, index=False)
    return path


class TestRegistry:

    def test_builtin_commands(self):
        assert CommandRegistry().list_commands() == ['analyze', 'fit-tail', 'scenario', 'simulate']

    def test_unknown_command(self):
        with pytest.raises(CommandNotFoundError):
            CommandRegistry().get_handler('plot')

    def test_processor_wraps_unknown_command(self):
        result = CommandProcessor(CommandRegistry()).process('plot', {})
        assert not result.success
        assert result.exit_code == 127
        assert result.error_message == "Command 'plot' not found"

    def test_usage_comes_from_handler(self):
        registry = CommandRegistry()
        assert registry.command_exists('fit-tail')
        assert registry.get_usage('fit-tail').startswith('fit-tail --input FILE')
        with pytest.raises(CommandNotFoundError):
            registry.get_usage('plot')

    def test_processor_wraps_domain_errors(self, tmp_path):
        result = CommandProcessor(CommandRegistry()).process(
            'fit-tail', {'input': str(tmp_path / 'none.csv'), 'column': 'close', 'min_tail': None})
        assert not result.success
        assert result.exit_code == 1
        assert result.error_message.startswith('fit-tail: cannot read')
        assert result.execution_time >= 0.0


def test_version(runner):
    result = runner.invoke(cli, ['--version'])
    assert result.exit_code == 0
    assert __version__ in result.output


@pytest.mark.parametrize('command', ['simulate', 'scenario', 'analyze', 'fit-tail'])
def test_help_shows_registered_usage(runner, command):
    result = runner.invoke(cli, [command, '--help'])
    assert result.exit_code == 0
    assert 'Usage summary:' in result.output
    assert f"  {command} --" in result.output


def test_log_file_receives_debug_records(runner, config_dir, tmp_path):
    log = tmp_path / 'logs' / 'run.log'
    result = invoke(runner, '--log-file', str(log), 'simulate', '--config',
                    str(config_dir / 'quiet.cfg'), '--steps', '5', '--out', str(tmp_path / 'q.csv'))
    assert result.exit_code == 0, result.output
    assert "'simulate' finished" in log.read_text(encoding='utf-8')


class TestSimulate:

    def test_writes_series(self, runner, config_dir, tmp_path):
        out = tmp_path / 'quiet.csv'
        result = invoke(runner, 'simulate', '--config', str(config_dir / 'quiet.cfg'),
                        '--steps', '5', '--out', str(out))
        assert result.exit_code == 0, result.output
        lines = out.read_text(encoding='utf-8').splitlines()
        assert lines[0] == 't,price,value,dbar,change,return'
        assert len(lines) == 7

    def test_identical_invocations_are_byte_identical(self, runner, config_dir, tmp_path):
        outputs = []
        for name in ('a.csv', 'b.csv'):
            out = tmp_path / name
            result = invoke(runner, 'simulate', '--config', str(config_dir / 'fig2.cfg'),
                            '--seed', '4', '--steps', '300', '--out', str(out))
            assert result.exit_code == 0, result.output
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]

    def test_seed_changes_the_path(self, runner, config_dir, tmp_path):
        for seed in ('1', '2'):
            invoke(runner, 'simulate', '--config', str(config_dir / 'fig2.cfg'),
                   '--seed', seed, '--steps', '50', '--out', str(tmp_path / f'{seed}.csv'))
        assert (tmp_path / '1.csv').read_bytes() != (tmp_path / '2.csv').read_bytes()

    def test_invalid_config_is_one_line_error(self, runner, config_dir, tmp_path):
        bad = tmp_path / 'bad.cfg'
        bad.write_text((config_dir / 'fig2.cfg').read_text().replace('tau = 1.0', 'tau = 1.5'))
        result = invoke(runner, 'simulate', '--config', str(bad), '--out', str(tmp_path / 'x.csv'))
        assert result.exit_code != 0
        errors = [line for line in result.output.splitlines() if line.startswith('Error:')]
        assert len(errors) == 1
        assert "key 'tau'" in errors[0]
        assert not (tmp_path / 'x.csv').exists()

    def test_missing_config(self, runner, tmp_path):
        result = invoke(runner, 'simulate', '--config', str(tmp_path / 'none.cfg'),
                        '--out', str(tmp_path / 'x.csv'))
        assert result.exit_code == 1
        assert 'cannot read' in result.output


class TestScenario:

    def test_quiet_batch(self, runner, tmp_path):
        out = tmp_path / 'quiet'
        result = invoke(runner, 'scenario', '--preset', 'quiet', '--realizations', '2',
                        '--steps', '100', '--max-lag', '5', '--out', str(out))
        assert result.exit_code == 0, result.output
        assert 'scenario: quiet_control' in result.output
        for name in ('report.txt', 'tail_curve.csv', 'acf.csv', 'path_head.csv'):
            assert (out / name).exists()

    def test_unknown_preset(self, runner, tmp_path):
        result = invoke(runner, 'scenario', '--preset', 'fig9', '--out', str(tmp_path))
        assert result.exit_code != 0

    def test_repeatable_report(self, runner, tmp_path):
        for name in ('a', 'b'):
            result = invoke(runner, 'scenario', '--preset', 'fig2', '--realizations', '2',
                            '--seed', '3', '--steps', '500', '--max-lag', '10',
                            '--out', str(tmp_path / name))
            assert result.exit_code == 0, result.output
        for name in ('report.txt', 'acf.csv', 'tail_curve.csv', 'path_head.csv'):
            assert (tmp_path / 'a' / name).read_bytes() == (tmp_path / 'b' / name).read_bytes()


class TestAnalyze:

    def test_simulated_file(self, runner, config_dir, tmp_path):
        series = tmp_path / 'series.csv'
        invoke(runner, 'simulate', '--config', str(config_dir / 'fig2.cfg'),
               '--steps', '2000', '--out', str(series))
        out = tmp_path / 'analysis.txt'
        result = invoke(runner, 'analyze', '--input', str(series), '--column', 'price',
                        '--max-lag', '20', '--out', str(out))
        assert result.exit_code == 0, result.output
        assert out.read_text(encoding='utf-8').startswith('schema=1\n')

    def test_reports_tail_estimators(self, runner, pareto_prices, tmp_path):
        result = invoke(runner, 'analyze', '--input', str(pareto_prices), '--column', 'close',
                        '--max-lag', '10', '--out', str(tmp_path / 'a.txt'))
        assert result.exit_code == 0, result.output
        assert '  tail: alpha=' in result.output
        assert '  hill: ' in result.output
        assert '  ls slope: -' in result.output

    def test_missing_column(self, runner, pareto_prices, tmp_path):
        result = invoke(runner, 'analyze', '--input', str(pareto_prices), '--column', 'open',
                        '--out', str(tmp_path / 'a.txt'))
        assert result.exit_code == 1
        assert "missing column 'open'" in result.output


class TestFitTail:

    def test_prints_fit_line(self, runner, pareto_prices):
        result = invoke(runner, 'fit-tail', '--input', str(pareto_prices), '--column', 'close')
        assert result.exit_code == 0, result.output
        line = result.output.strip()
        assert line.startswith('alpha=')
        fields = dict(part.split('=') for part in line.split())
        assert set(fields) == {'alpha', 'xmin', 'ks', 'n_tail'}
        assert abs(float(fields['alpha']) - 3.0) < 0.4
        assert int(fields['n_tail']) >= 50

    def test_min_tail_too_large(self, runner, pareto_prices):
        result = invoke(runner, 'fit-tail', '--input', str(pareto_prices), '--column', 'close',
                        '--min-tail', '100000')
        assert result.exit_code == 1
        assert result.output.startswith('Error: fit-tail:')

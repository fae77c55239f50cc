"""
Command-line interface for the toolkit.
"""

import sys
from typing import Any, Dict

import click
import colorama

from news_market import __version__
from news_market.config.settings import config
from news_market.core.command_processor import CommandProcessor
from news_market.core.command_registry import CommandRegistry
from news_market.core.models import CommandResult
from news_market.experiments.presets import CLI_ALIASES
from news_market.utils.logging_config import get_logger, setup_logging

registry = CommandRegistry()


def _usage(command_name: str) -> str:
    """Epilog carrying the registered one-line usage, kept unwrapped."""
    return f"\b\nUsage summary:\n  {registry.get_usage(command_name)}"


class CLIInterface:
    """Runs registered commands and reports their results on the terminal."""

    def __init__(self):
        self.logger = get_logger('cli_interface')
        self.processor = CommandProcessor(registry)

    def run(self, command_name: str, options: Dict[str, Any]) -> None:
        """Execute a command and exit nonzero with one diagnostic line on failure."""
        result = self.processor.process(command_name, options)
        self.display_result(result)
        if not result.success:
            sys.exit(result.exit_code or 1)

    def display_result(self, result: CommandResult) -> None:
        """Display command result."""
        if result.output:
            click.echo(result.output)

        if not result.success and result.error_message:
            line = result.error_message.splitlines()[0] if result.error_message else ''
            message = f"Error: {line}"
            if config.is_colored_output_enabled() and sys.stderr.isatty():
                message = f"{colorama.Fore.RED}{message}{colorama.Style.RESET_ALL}"
            click.echo(message, err=True)


@click.group()
@click.version_option(__version__, prog_name='news-market')
@click.option('--log-level', type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                                               case_sensitive=False),
              default=None, help='Logging level (default: INFO or NEWS_MARKET_LOG_LEVEL)')
@click.option('--log-file', type=click.Path(dir_okay=False), default=None,
              help='Also log everything to this file')
@click.pass_context
def cli(ctx: click.Context, log_level: str, log_file: str) -> None:
    """Two-regime market simulator and stylized-facts toolkit."""
    colorama.just_fix_windows_console()
    setup_logging(log_level=log_level or config.get_log_level(), log_file=log_file,
                  console_output=True)
    ctx.obj = CLIInterface()


@cli.command(epilog=_usage('simulate'))
@click.option('--config', 'config_path', required=True, type=click.Path(dir_okay=False),
              help='Model configuration file (key = value)')
@click.option('--seed', type=int, default=None,
              help="Random seed (default: the file's seed key, else 0)")
@click.option('--steps', type=int, default=None, help='Override the path length')
@click.option('--out', required=True, type=click.Path(dir_okay=False),
              help='Series file to write')
@click.pass_obj
def simulate(interface: CLIInterface, config_path: str, seed: int, steps: int, out: str) -> None:
    """Run one series and write it as delimited text."""
    interface.run('simulate', {'config': config_path, 'seed': seed, 'steps': steps, 'out': out})


@cli.command(epilog=_usage('scenario'))
@click.option('--preset', required=True, type=click.Choice(list(CLI_ALIASES)),
              help='Scenario to run')
@click.option('--realizations', type=int, default=None, help='Number of seeds (default: 10)')
@click.option('--seed', type=int, default=0, show_default=True, help='First seed')
@click.option('--steps', type=int, default=None, help='Path length (default: 20000)')
@click.option('--max-lag', type=int, default=None, help='ACF lag range (default: 100)')
@click.option('--out', required=True, type=click.Path(file_okay=False),
              help='Report directory to write')
@click.pass_obj
def scenario(interface: CLIInterface, preset: str, realizations: int, seed: int,
             steps: int, max_lag: int, out: str) -> None:
    """Run a preset batch and write the report plus plot tables."""
    interface.run('scenario', {
        'preset': preset, 'realizations': realizations, 'seed': seed,
        'steps': steps, 'max_lag': max_lag, 'out': out,
    })


@cli.command(epilog=_usage('analyze'))
@click.option('--input', 'input_path', required=True, type=click.Path(dir_okay=False),
              help='Delimited price file with a header row')
@click.option('--column', required=True, help='Price column name')
@click.option('--max-lag', type=int, default=None, help='ACF lag range (default: 100)')
@click.option('--min-tail', type=int, default=None, help='Smallest tail size (default: 50)')
@click.option('--out', required=True, type=click.Path(dir_okay=False),
              help='Analysis document to write')
@click.pass_obj
def analyze(interface: CLIInterface, input_path: str, column: str, max_lag: int,
            min_tail: int, out: str) -> None:
    """Stylized-fact statistics of an empirical price series."""
    interface.run('analyze', {
        'input': input_path, 'column': column, 'max_lag': max_lag,
        'min_tail': min_tail, 'out': out,
    })


@cli.command('fit-tail', epilog=_usage('fit-tail'))
@click.option('--input', 'input_path', required=True, type=click.Path(dir_okay=False),
              help='Delimited price file with a header row')
@click.option('--column', required=True, help='Price column name')
@click.option('--min-tail', type=int, default=None, help='Smallest tail size (default: 50)')
@click.pass_obj
def fit_tail(interface: CLIInterface, input_path: str, column: str, min_tail: int) -> None:
    """Power-law fit of absolute percent returns, printed to standard output."""
    interface.run('fit-tail', {'input': input_path, 'column': column, 'min_tail': min_tail})

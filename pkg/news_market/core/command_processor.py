"""
Command processor: dispatches parsed options to a registered command.
"""

import time
from typing import Any, Dict

from news_market.core.command_registry import CommandRegistry
from news_market.core.models import CommandResult, NewsMarketError
from news_market.utils.logging_config import get_logger


class CommandProcessor:
    """Executes commands and wraps every outcome in a CommandResult."""

    def __init__(self, command_registry: CommandRegistry):
        self.logger = get_logger('command_processor')
        self.command_registry = command_registry

    def process(self, command_name: str, options: Dict[str, Any]) -> CommandResult:
        """
        Execute a command with already-parsed options.

        Args:
            command_name: Registered command name
            options: Option values keyed by their long-flag name

        Returns:
            CommandResult with execution details; failures never raise
        """
        start_time = time.time()

        if not self.command_registry.command_exists(command_name):
            return CommandResult(
                success=False,
                output="",
                error_message=f"Command '{command_name}' not found",
                exit_code=127,
                execution_time=time.time() - start_time
            )

        handler = self.command_registry.get_handler(command_name)

        try:
            result = handler.execute(options)
        except NewsMarketError as e:
            self.logger.debug(f"'{command_name}' failed: {type(e).__name__}: {e}")
            result = CommandResult(
                success=False,
                output="",
                error_message=f"{command_name}: {e}",
                exit_code=1
            )
        except Exception as e:
            self.logger.error(f"Error executing command '{command_name}': {e}", exc_info=True)
            result = CommandResult(
                success=False,
                output="",
                error_message=f"{command_name}: unexpected error: {e}",
                exit_code=1
            )

        result.execution_time = time.time() - start_time
        if result.success:
            self.logger.info(f"'{command_name}' finished in {result.execution_time:.2f}s")
        return result

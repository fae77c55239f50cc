"""
Command registry for the toolkit's batch commands.
"""

from typing import Dict, List

from news_market.core.models import BaseCommand, CommandNotFoundError
from news_market.utils.logging_config import get_logger


class CommandRegistry:
    """Registry mapping command names to their handlers."""

    def __init__(self):
        self.logger = get_logger('command_registry')
        self.commands: Dict[str, BaseCommand] = {}

        self._load_builtin_commands()

    def register(self, handler: BaseCommand) -> None:
        """
        Register a command handler under its own name.

        Args:
            handler: Command handler instance
        """
        name = handler.get_name()
        self.commands[name] = handler
        self.logger.debug(f"Registered command: {name}")

    def get_handler(self, command_name: str) -> BaseCommand:
        """
        Get command handler by name.

        Raises:
            CommandNotFoundError: If command is not found
        """
        if command_name in self.commands:
            return self.commands[command_name]
        raise CommandNotFoundError(f"Command '{command_name}' not found")

    def list_commands(self) -> List[str]:
        """Get list of all available command names."""
        return sorted(self.commands.keys())

    def command_exists(self, command_name: str) -> bool:
        return command_name in self.commands

    def get_usage(self, command_name: str) -> str:
        """
        One-line usage text of a registered command.

        Raises:
            CommandNotFoundError: If command is not found
        """
        return self.get_handler(command_name).get_help()

    def _load_builtin_commands(self) -> None:
        """Load the simulation and analysis commands."""
        from news_market.commands.analysis_commands import AnalyzeCommand, FitTailCommand
        from news_market.commands.simulation_commands import ScenarioCommand, SimulateCommand

        for handler in (SimulateCommand(), ScenarioCommand(), AnalyzeCommand(), FitTailCommand()):
            self.register(handler)

        self.logger.debug(f"Loaded {len(self.commands)} built-in commands")

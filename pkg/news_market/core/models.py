"""
Core data models and exceptions for the news-market toolkit.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, Optional


@dataclass
class CommandResult:
    """Result of command execution."""
    success: bool
    output: str
    error_message: Optional[str] = None
    exit_code: int = 0
    execution_time: float = 0.0


class BaseCommand(ABC):
    """Abstract base class for all toolkit commands."""

    @abstractmethod
    def execute(self, options: Dict[str, Any]) -> CommandResult:
        """Execute the command with the parsed command-line options."""
        pass

    @abstractmethod
    def get_help(self) -> str:
        """Return help text for the command."""
        pass

    def get_name(self) -> str:
        """Get the command name. Default implementation uses class name."""
        return self.__class__.__name__.lower().replace('command', '')


class NewsMarketError(Exception):
    """Base class for every error raised by the toolkit."""
    pass


class CommandNotFoundError(NewsMarketError):
    """Raised when a command is not found in the registry."""
    pass


class InvalidParameterError(NewsMarketError, ValueError):
    """Raised when a model or estimator parameter violates its invariants."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


class DegenerateRunError(NewsMarketError, ArithmeticError):
    """Raised when a simulated price path makes returns undefined."""

    def __init__(self, step: int, message: str):
        super().__init__(f"degenerate run at step {step}: {message}")
        self.step = step


class ZeroPriceError(NewsMarketError, ValueError):
    """Raised when a return would divide by a zero price."""

    def __init__(self, index: int):
        super().__init__(f"zero price at index {index}")
        self.index = index


class InsufficientDataError(NewsMarketError, ValueError):
    """Raised when an estimator receives too few usable observations."""
    pass


class ZeroVarianceError(NewsMarketError, ValueError):
    """Raised when a moment-based estimator receives a constant series."""
    pass


class ConfigError(NewsMarketError, ValueError):
    """Raised for malformed or invalid configuration files."""

    def __init__(self, message: str, key: Optional[str] = None, line: Optional[int] = None):
        location = []
        if key is not None:
            location.append(f"key '{key}'")
        if line is not None:
            location.append(f"line {line}")
        prefix = f"{', '.join(location)}: " if location else ""
        super().__init__(f"{prefix}{message}")
        self.key = key
        self.line = line


class PriceTableError(NewsMarketError, ValueError):
    """Raised when a delimited price file cannot be ingested."""

    def __init__(self, message: str, row: Optional[int] = None):
        super().__init__(f"row {row}: {message}" if row is not None else message)
        self.row = row


class OutputError(NewsMarketError, OSError):
    """Raised when a destination cannot be written."""

    def __init__(self, destination: str, reason: str):
        super().__init__(f"cannot write {destination}: {reason}")
        self.destination = destination


class ReportFormatError(NewsMarketError, ValueError):
    """Raised when a report document does not follow the schema."""
    pass

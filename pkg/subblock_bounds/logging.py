import logging
import sys
from datetime import datetime
from typing import Any, Callable, Optional

from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table
from rich.theme import Theme


class LogConfig:
    """
    Centralized configuration for diagnostics.
    Manages verbosity, Rich formatting and an optional external sink.
    """

    def __init__(
        self,
        verbose: int = 1,
        use_rich: bool = True,
        external_logger: Optional[Callable[[dict[str, Any]], None]] = None,
        stderr: bool = True,
    ):
        """
        Initialize logging configuration.

        Args:
            verbose: Verbosity level (0=error, 1=info, 2=debug)
            use_rich: Whether to use Rich for formatted output
            external_logger: Optional callback receiving structured log records
            stderr: Write console output to stderr (stdout carries payloads)
        """
        self.verbose = verbose
        self.use_rich = use_rich
        self.external_logger = external_logger
        self.stderr = stderr

    def should_log(self, level: int) -> bool:
        """Check if a message at the given level should be logged."""
        # Errors always go through
        if level == 0:
            return True
        return level <= self.verbose


bounds_theme = Theme(
    {
        "info": "cyan",
        "warning": "yellow",
        "error": "bold red",
        "debug": "bold white",
        "category": "bold blue",
        "auxiliary": "white",
        "timestamp": "dim white",
    }
)


def get_console(use_rich: bool = True, stderr: bool = True) -> Console:
    """Themed console for Rich output, or an uncoloured one."""
    if use_rich:
        return Console(theme=bounds_theme, stderr=stderr)
    return Console(theme=None, stderr=stderr, no_color=True, highlight=False)


class StderrHandler(logging.StreamHandler):
    """Stream handler bound to whatever sys.stderr is at emit time."""

    def __init__(self, level: int = logging.NOTSET):
        logging.Handler.__init__(self, level)

    @property
    def stream(self):
        return sys.stderr


# Plain-mode sink. Thresholds live on each BoundsLogger, so this logger
# passes everything it is handed.
logger = logging.getLogger(__name__)
if not logger.handlers:
    handler = StderrHandler()
    handler.setFormatter(logging.Formatter("%(levelname)s %(message)s"))
    logger.addHandler(handler)
    logger.propagate = False
logger.setLevel(logging.DEBUG)


class BoundsLogger:
    """
    Structured logger with leveled output and Rich formatting.
    """

    def __init__(
        self,
        verbose: int = 1,
        external_logger: Optional[Callable[[dict[str, Any]], None]] = None,
        use_rich: bool = True,
        config: Optional[LogConfig] = None,
    ):
        """
        Initialize the logger with specified verbosity and optional external logger.

        Args:
            verbose: Verbosity level (0=error only, 1=info, 2=debug)
            external_logger: Optional callback function for log events
            use_rich: Whether to use Rich for pretty output (default: True)
            config: Optional LogConfig instance. If provided, overrides other parameters.
        """
        if config:
            self.config = config
        else:
            self.config = LogConfig(
                verbose=verbose,
                use_rich=use_rich,
                external_logger=external_logger,
            )

        self.console = get_console(self.config.use_rich, self.config.stderr)
        self.level_style = {0: "error", 1: "info", 2: "debug"}

    @property
    def verbose(self) -> int:
        return self.config.verbose

    @property
    def use_rich(self) -> bool:
        return self.config.use_rich

    @property
    def external_logger(self):
        return self.config.external_logger

    @staticmethod
    def _format_value(value: Any) -> str:
        if isinstance(value, float):
            return f"{value:.6g}"
        return str(value)

    def log(
        self,
        message: str,
        level: int = 1,
        category: Optional[str] = None,
        auxiliary: Optional[dict[str, Any]] = None,
    ):
        """
        Log a message with structured data.

        Args:
            message: The message to log
            level: Verbosity level (0=error, 1=info, 2=debug)
            category: Optional category for the message (e.g. "lp", "oracle")
            auxiliary: Optional dictionary of auxiliary data
        """
        if not self.config.should_log(level):
            return

        if self.external_logger:
            record: dict[str, Any] = {
                "message": message,
                "level": level,
                "timestamp": datetime.now().isoformat(),
            }
            if category:
                record["category"] = category
            if auxiliary:
                record["auxiliary"] = auxiliary
            self.external_logger(record)
            return

        aux = {k: self._format_value(v) for k, v in (auxiliary or {}).items()}

        if self.use_rich:
            level_style = self.level_style.get(level, "info")
            timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
            line = (
                f"[timestamp]{timestamp}[/timestamp] "
                f"[{level_style}]{level_style.upper()}[/{level_style}]"
            )
            if category:
                line += f" [category]{escape(category)}[/category]"
            line += f" - {escape(message)}"

            if aux and len(aux) <= 2:
                items = escape(", ".join(f"{k}={v}" for k, v in aux.items()))
                line += f" [auxiliary]({items})[/auxiliary]"
                self.console.print(line)
            elif aux:
                self.console.print(line)
                table = Table(show_header=False, box=None, padding=(0, 1, 0, 1))
                table.add_column("Key", style="cyan")
                table.add_column("Value")
                for k, v in aux.items():
                    table.add_row(escape(k), escape(v))
                self.console.print(Panel(table, expand=False, border_style="dim"))
            else:
                self.console.print(line)
            return

        prefix = f"[{category}] " if category else ""
        text = f"{prefix}{message}"
        if aux:
            text += " (" + ", ".join(f"{k}={v}" for k, v in aux.items()) + ")"
        if level == 0:
            logger.error(text)
        elif level == 1:
            logger.info(text)
        else:
            logger.debug(text)

    def error(
        self,
        message: str,
        category: Optional[str] = None,
        auxiliary: Optional[dict[str, Any]] = None,
    ):
        """Log an error message (level 0)"""
        self.log(message, level=0, category=category, auxiliary=auxiliary)

    def info(
        self,
        message: str,
        category: Optional[str] = None,
        auxiliary: Optional[dict[str, Any]] = None,
    ):
        """Log an info message (level 1)"""
        self.log(message, level=1, category=category, auxiliary=auxiliary)

    def debug(
        self,
        message: str,
        category: Optional[str] = None,
        auxiliary: Optional[dict[str, Any]] = None,
    ):
        """Log a debug message (level 2)"""
        self.log(message, level=2, category=category, auxiliary=auxiliary)

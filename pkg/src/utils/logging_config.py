import logging
import sys
from typing import Any, List, Optional, TextIO

import structlog

from .errors import ConfigurationError

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _resolve_level(log_level: str) -> int:
    name = log_level.strip().upper()
    if name not in LOG_LEVELS:
        raise ConfigurationError(f"unknown log level {log_level!r}; expected one of {LOG_LEVELS}")
    return getattr(logging, name)


def _processors(json_logs: bool) -> List[Any]:
    processors: List[Any] = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
    ]
    # stderr may be a file or pipe, so no ANSI colors
    processors.append(
        structlog.processors.JSONRenderer() if json_logs
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    return processors


def setup_logging(
    log_level: str = "INFO",
    json_logs: bool = False,
    stream: Optional[TextIO] = None
) -> None:
    """
    Configure structured logging for the toolkit.

    Standard output carries solutions and reports, so logs default to
    standard error. Calling this again replaces the previous handlers.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        json_logs: Whether to output logs in JSON format
        stream: Destination stream, defaults to sys.stderr

    Raises:
        ConfigurationError: If the level name is unknown
    """
    level = _resolve_level(log_level)
    logging.basicConfig(
        format="%(message)s",
        stream=stream or sys.stderr,
        level=level,
        force=True,
    )
    structlog.configure(
        processors=_processors(json_logs),
        wrapper_class=structlog.stdlib.BoundLogger,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


def bind_run_context(**context: Any) -> None:
    """Attach key/value context (command, graph id, k) to every later log line."""
    structlog.contextvars.bind_contextvars(**context)


def clear_run_context() -> None:
    structlog.contextvars.clear_contextvars()


def get_logger(name: Optional[str] = None) -> structlog.BoundLogger:
    """
    Get a structured logger instance.

    Args:
        name: Logger name (typically __name__ of the module)

    Returns:
        Configured logger instance
    """
    return structlog.get_logger(name)

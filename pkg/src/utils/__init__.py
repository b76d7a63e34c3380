from .config import Config
from .logging_config import bind_run_context, clear_run_context, get_logger, setup_logging

__all__ = ["Config", "setup_logging", "get_logger", "bind_run_context", "clear_run_context"]

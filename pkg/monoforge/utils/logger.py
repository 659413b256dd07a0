"""
Logging Configuration Module

Console records go to stderr, coloured by level when colorama is present,
so that summaries, JSON and DOT written to stdout stay machine-readable.
"""

import logging
import platform
import sys
from pathlib import Path
from typing import Any, Dict, Optional

try:
    import colorama
    from colorama import Back, Fore, Style
    colorama.init()
    COLORAMA_AVAILABLE = True
except ImportError:
    COLORAMA_AVAILABLE = False


DEFAULT_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DEFAULT_LOG_FILE = Path('monoforge.log')

LEVEL_COLORS = {
    logging.DEBUG: 'CYAN',
    logging.INFO: 'GREEN',
    logging.WARNING: 'YELLOW',
    logging.ERROR: 'RED',
    logging.CRITICAL: 'RED+WHITE',
}

# optional packages reported by log_system_info, with what needs them
LIBRARIES = {
    'numpy': 'random states for the invariant checks',
    'pandas': 'comparison tables and corpus reports',
    'yaml': 'YAML configuration files',
    'colorama': 'coloured console output',
}


def _ansi(spec: str) -> str:
    fore, _, back = spec.partition('+')
    code = getattr(Fore, fore)
    return code + getattr(Back, back) if back else code


class ColoredFormatter(logging.Formatter):
    """Wraps each formatted record in the colour of its level."""

    def __init__(self, fmt: Optional[str] = None, use_color: bool = True):
        super().__init__(fmt)
        self.use_color = use_color and COLORAMA_AVAILABLE
        self.colors = {level: _ansi(spec) for level, spec in LEVEL_COLORS.items()} if self.use_color else {}

    def format(self, record: logging.LogRecord) -> str:
        text = super().format(record)
        color = self.colors.get(record.levelno)
        return f"{color}{text}{Style.RESET_ALL}" if color else text


def _console_handler(level: int, format_string: str, colors: bool) -> logging.Handler:
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(ColoredFormatter(format_string, use_color=colors))
    return handler


def _file_handler(level: int, format_string: str, log_file: Path) -> logging.Handler:
    log_file.parent.mkdir(parents=True, exist_ok=True)
    handler = logging.FileHandler(log_file, mode='a', encoding='utf-8')
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(format_string))
    return handler


def setup_logging(
    level: int = logging.INFO,
    format_string: Optional[str] = None,
    enable_file_logging: bool = False,
    log_file: Optional[Path] = None,
    console_colors: bool = True,
) -> logging.Logger:
    """
    Replace the root logger's handlers for a monoforge process.

    Args:
        level: Level for the root logger and every handler
        format_string: Record format (default ``DEFAULT_FORMAT``)
        enable_file_logging: Also append records to ``log_file``
        log_file: Log file path (default ``monoforge.log``)
        console_colors: Colour console records by level

    Returns:
        Root logger instance
    """
    format_string = format_string or DEFAULT_FORMAT

    root_logger = logging.getLogger()
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)
    root_logger.setLevel(level)

    root_logger.addHandler(_console_handler(level, format_string, console_colors))
    if enable_file_logging:
        log_file = log_file or DEFAULT_LOG_FILE
        root_logger.addHandler(_file_handler(level, format_string, log_file))
        root_logger.info(f"File logging enabled: {log_file}")

    return root_logger


def configure_from_config(section: Dict[str, Any], verbose: bool = False) -> logging.Logger:
    """
    Apply the ``logging`` section of a configuration.

    ``verbose`` forces DEBUG and logs the system information.
    """
    if verbose:
        level = logging.DEBUG
    else:
        level = getattr(logging, str(section.get('level', 'INFO')).upper(), logging.INFO)

    root_logger = setup_logging(
        level=level,
        format_string=section.get('format'),
        enable_file_logging=bool(section.get('file_logging', False)),
        log_file=Path(section.get('log_file', DEFAULT_LOG_FILE)),
        console_colors=bool(section.get('colors', True)),
    )
    if verbose:
        log_system_info()
    return root_logger


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)


def log_system_info() -> None:
    """Log platform and optional-library availability at DEBUG."""
    logger = get_logger(__name__)

    logger.debug(f"monoforge on {platform.platform()}, Python {platform.python_version()}")
    for lib_name, purpose in LIBRARIES.items():
        try:
            __import__(lib_name)
            logger.debug(f"{lib_name}: available ({purpose})")
        except ImportError:
            logger.warning(f"{lib_name}: not available, needed for {purpose}")

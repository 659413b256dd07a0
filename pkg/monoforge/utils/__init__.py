"""
Utility modules package initialization
"""

from .config import Config
from .logger import setup_logging, configure_from_config, get_logger, log_system_info

__all__ = [
    'Config',
    'setup_logging',
    'configure_from_config',
    'get_logger',
    'log_system_info',
]

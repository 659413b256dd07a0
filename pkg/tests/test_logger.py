"""
Tests for logging setup
"""

import logging
import sys
import tempfile
from pathlib import Path

import pytest

from monoforge.utils.logger import ColoredFormatter, configure_from_config, setup_logging


class TestSetupLogging:
    """Test cases for the root logger configuration."""

    def setup_method(self):
        """Set up test fixtures."""
        self.temp_dir = tempfile.TemporaryDirectory()
        self.log_dir = Path(self.temp_dir.name)

    def teardown_method(self):
        """Reset the root logger and clean up."""
        setup_logging(level=logging.WARNING, console_colors=False)
        self.temp_dir.cleanup()

    def test_console_goes_to_stderr(self):
        """Test that console records never reach stdout."""
        root = setup_logging(level=logging.INFO)

        assert len(root.handlers) == 1
        assert root.handlers[0].stream is sys.stderr

    def test_handlers_replaced(self):
        """Test that repeated setup does not stack handlers."""
        setup_logging()
        root = setup_logging()

        assert len(root.handlers) == 1

    def test_file_logging(self):
        """Test the optional log file."""
        log_file = self.log_dir / "logs" / "run.log"
        root = setup_logging(enable_file_logging=True, log_file=log_file)
        logging.getLogger("monoforge.test").info("written to file")
        for handler in root.handlers:
            handler.flush()

        assert "written to file" in log_file.read_text(encoding='utf-8')
        setup_logging()

    def test_plain_formatter_without_colors(self):
        """Test that colours can be switched off."""
        formatter = ColoredFormatter("%(message)s", use_color=False)
        record = logging.LogRecord("x", logging.ERROR, __file__, 1, "plain", None, None)

        assert formatter.format(record) == "plain"


class TestConfigureFromConfig:
    """Test cases for applying the logging section."""

    def teardown_method(self):
        """Reset the root logger."""
        setup_logging(level=logging.WARNING, console_colors=False)

    def test_level_from_section(self):
        """Test the configured level."""
        root = configure_from_config({'level': 'warning', 'colors': False})
        assert root.level == logging.WARNING

    def test_verbose_forces_debug(self):
        """Test that --verbose wins over the section."""
        root = configure_from_config({'level': 'ERROR'}, verbose=True)
        assert root.level == logging.DEBUG

    def test_unknown_level_falls_back(self):
        """Test an unknown level name."""
        assert configure_from_config({'level': 'chatty'}).level == logging.INFO


if __name__ == "__main__":
    pytest.main([__file__])

"""
Tests for configuration management
"""

import json
import tempfile
from pathlib import Path

import pytest
import yaml

from monoforge.utils.config import THREADS_ENV, Config


class TestConfig:
    """Test cases for Config."""

    def setup_method(self):
        """Set up test fixtures."""
        self.temp_dir = tempfile.TemporaryDirectory()
        self.config_dir = Path(self.temp_dir.name)

    def teardown_method(self):
        """Clean up test fixtures."""
        self.temp_dir.cleanup()

    def test_defaults(self):
        """Test the built-in settings."""
        config = Config.default()

        assert config.get('engine.default_mode') == 2
        assert config.get('export.json_indent') == 2
        assert config.get('corpus.run_skipped') is True
        assert config.get('logging.level') == 'INFO'

    def test_get_missing_key(self):
        """Test the fallback value."""
        assert Config.default().get('engine.missing', 'fallback') == 'fallback'

    def test_set_nested(self):
        """Test setting values with dot notation."""
        config = Config.default()
        config.set('export.csv_delimiter', ';')
        config.set('extra.section.value', 5)

        assert config.get('export.csv_delimiter') == ';'
        assert config.get('extra.section.value') == 5

    def test_load_json_merges_defaults(self):
        """Test that a partial JSON file keeps the other defaults."""
        path = self.config_dir / "config.json"
        path.write_text(json.dumps({'engine': {'default_mode': 1}}), encoding='utf-8')

        config = Config.load(path)

        assert config.get('engine.default_mode') == 1
        assert config.get('export.dot_rankdir') == 'TB'

    def test_load_yaml(self):
        """Test YAML configuration files."""
        path = self.config_dir / "config.yaml"
        path.write_text(yaml.safe_dump({'export': {'dot_rankdir': 'LR'}}), encoding='utf-8')

        assert Config.load(path).get('export.dot_rankdir') == 'LR'

    def test_load_missing_file(self):
        """Test a path that does not exist."""
        with pytest.raises(FileNotFoundError):
            Config.load(self.config_dir / "absent.json")

    def test_load_unsupported_suffix(self):
        """Test that unknown formats are rejected."""
        path = self.config_dir / "config.ini"
        path.write_text("[engine]\n", encoding='utf-8')

        with pytest.raises(RuntimeError):
            Config.load(path)

    def test_load_invalid_json(self):
        """Test a broken file."""
        path = self.config_dir / "config.json"
        path.write_text("{not json", encoding='utf-8')

        with pytest.raises(RuntimeError):
            Config.load(path)

    def test_save_and_load(self):
        """Test that saved settings load back."""
        config = Config.default()
        config.set('engine.default_mode', 3)
        path = self.config_dir / "saved" / "config.yml"
        config.save(path)

        assert Config.load(path).get('engine.default_mode') == 3

    def test_threads_from_environment(self, monkeypatch):
        """Test the worker count override."""
        monkeypatch.setenv(THREADS_ENV, "3")
        assert Config.default().threads == 3

    def test_invalid_threads_ignored(self, monkeypatch):
        """Test that bad values fall back to one worker."""
        monkeypatch.setenv(THREADS_ENV, "many")
        assert Config.default().threads == 1

        monkeypatch.setenv(THREADS_ENV, "0")
        assert Config.default().threads == 1

    def test_defaults_validate(self):
        """Test that the built-in settings are valid."""
        assert Config.default().validate() == []

    def test_invalid_values_rejected(self):
        """Test that a bad mode and a bad layout are reported together."""
        path = self.config_dir / "config.json"
        path.write_text(
            json.dumps({'engine': {'default_mode': 9}, 'export': {'dot_rankdir': 'up'}}),
            encoding='utf-8',
        )

        with pytest.raises(RuntimeError) as excinfo:
            Config.load(path)
        assert "engine.default_mode" in str(excinfo.value)
        assert "export.dot_rankdir" in str(excinfo.value)

    def test_mode_names_accepted(self):
        """Test strategy names as default mode."""
        config = Config.default()
        config.set('engine.default_mode', 'mincodim')

        assert config.validate() == []

    def test_to_dict_is_a_copy(self):
        """Test that callers cannot change the settings through to_dict."""
        config = Config.default()
        config.to_dict()['engine']['default_mode'] = 4

        assert config.get('engine.default_mode') == 2

    def test_update(self):
        """Test merging a dictionary of changes."""
        config = Config.default()
        config.update({'logging': {'level': 'DEBUG'}})

        assert config.get('logging.level') == 'DEBUG'
        assert config.get('logging.log_file') == 'monoforge.log'


if __name__ == "__main__":
    pytest.main([__file__])

"""
Configuration Management Module

Settings for the engine, exporters, corpus runner and logging.
JSON and YAML files are merged over the built-in defaults and checked
before use.
"""

import copy
import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

THREADS_ENV = 'MONOFORGE_THREADS'

MODE_NAMES = {'1', '2', '3', '4', 'maxord', 'codim2', 'mincodim', 'exc', 'exceptional'}
RANKDIRS = {'TB', 'BT', 'LR', 'RL'}

logger = logging.getLogger(__name__)


def _threads_from_env() -> int:
    raw = os.getenv(THREADS_ENV)
    if raw is None:
        return 1
    try:
        threads = int(raw)
    except ValueError:
        logger.warning(f"Ignoring {THREADS_ENV}={raw!r}: not an integer")
        return 1
    if threads < 1:
        logger.warning(f"Ignoring {THREADS_ENV}={raw!r}: must be at least 1")
        return 1
    return threads


def _read_document(path: Path) -> Dict[str, Any]:
    suffix = path.suffix.lower()
    with open(path, 'r', encoding='utf-8') as f:
        if suffix == '.json':
            return json.load(f)
        if suffix in ('.yml', '.yaml'):
            import yaml
            return yaml.safe_load(f) or {}
    raise ValueError(f"Unsupported config file format: {path.suffix}")


def _write_document(data: Dict[str, Any], path: Path) -> None:
    suffix = path.suffix.lower()
    if suffix not in ('.json', '.yml', '.yaml'):
        raise ValueError(f"Unsupported config file format: {path.suffix}")
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        if suffix == '.json':
            json.dump(data, f, indent=2, sort_keys=True)
        else:
            import yaml
            yaml.safe_dump(data, f, default_flow_style=False)


def _merge(base: Dict[str, Any], updates: Dict[str, Any]) -> Dict[str, Any]:
    """Recursive merge; nested sections are merged, everything else replaced."""
    merged = dict(base)
    for key, value in updates.items():
        if isinstance(merged.get(key), dict) and isinstance(value, dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class Config:
    """Configuration manager for monoforge."""

    def __init__(self, config_data: Optional[Dict[str, Any]] = None):
        self._config = config_data or {}
        self.logger = logging.getLogger(__name__)

    @classmethod
    def default(cls) -> "Config":
        """Create configuration with default settings."""
        return cls({
            'engine': {
                'default_mode': 2,
                'threads': _threads_from_env(),
            },

            'export': {
                'json_indent': 2,
                'csv_delimiter': ',',
                'dot_rankdir': 'TB',
            },

            'corpus': {
                # skip-flagged cells are still computed, only their verdict is dropped
                'run_skipped': True,
            },

            'logging': {
                'level': 'INFO',
                'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
                'colors': True,
                'file_logging': False,
                'log_file': 'monoforge.log',
            },
        })

    @classmethod
    def load(cls, config_path: Path) -> "Config":
        """
        Load a JSON or YAML file merged over ``Config.default()``.

        Raises:
            FileNotFoundError: the file does not exist
            RuntimeError: the file could not be read, parsed or validated
        """
        if not config_path.exists():
            raise FileNotFoundError(f"Configuration file not found: {config_path}")

        try:
            document = _read_document(config_path)
            if not isinstance(document, dict):
                raise ValueError("top level must be a mapping")
            config = cls(_merge(cls.default().to_dict(), document))
            problems = config.validate()
            if problems:
                raise ValueError("; ".join(problems))
        except Exception as e:
            raise RuntimeError(f"Error loading configuration from {config_path}: {e}") from e

        config.logger.debug(f"Loaded configuration from {config_path}")
        return config

    def validate(self) -> List[str]:
        """Return a description of every invalid setting (empty when all are fine)."""
        problems = []
        if str(self.get('engine.default_mode')).strip().lower() not in MODE_NAMES:
            problems.append(f"engine.default_mode: unknown mode {self.get('engine.default_mode')!r}")
        threads = self.get('engine.threads')
        if isinstance(threads, bool) or not isinstance(threads, int) or threads < 1:
            problems.append(f"engine.threads: expected a positive integer, got {threads!r}")
        indent = self.get('export.json_indent')
        if indent is not None and (isinstance(indent, bool) or not isinstance(indent, int) or indent < 0):
            problems.append(f"export.json_indent: expected a non-negative integer, got {indent!r}")
        if len(str(self.get('export.csv_delimiter', ','))) != 1:
            problems.append("export.csv_delimiter: expected a single character")
        if self.get('export.dot_rankdir') not in RANKDIRS:
            problems.append(f"export.dot_rankdir: expected one of {sorted(RANKDIRS)}")
        return problems

    def get(self, key: str, default: Any = None) -> Any:
        """Look up a value by dotted key, e.g. ``'engine.threads'``."""
        value: Any = self._config
        for part in key.split('.'):
            if not isinstance(value, dict) or part not in value:
                return default
            value = value[part]
        return value

    def set(self, key: str, value: Any) -> None:
        *sections, name = key.split('.')
        target = self._config
        for section in sections:
            target = target.setdefault(section, {})
        target[name] = value

    def update(self, updates: Dict[str, Any]) -> None:
        self._config = _merge(self._config, updates)

    def save(self, config_path: Path) -> None:
        """Write the settings as JSON or YAML, chosen by file suffix."""
        try:
            _write_document(self._config, config_path)
        except Exception as e:
            raise RuntimeError(f"Error saving configuration to {config_path}: {e}") from e

    @property
    def threads(self) -> int:
        return max(1, int(self.get('engine.threads', 1)))

    def to_dict(self) -> Dict[str, Any]:
        return copy.deepcopy(self._config)

    def __repr__(self) -> str:
        return f"Config({self._config})"

"""
Export Module

Writes chart trees as JSON (schema version 1) and Graphviz DOT, and
strategy comparisons and corpus reports as pandas tables / CSV.
"""

import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

import pandas as pd

from monoforge.core.binomial import BinomialState
from monoforge.core.engine import Chart, Mode, RunResult
from monoforge.core.multirun import MultiChart, SequenceResult
from monoforge.core.parser import render_bracket, render_monomial
from monoforge.utils.config import Config

SCHEMA_VERSION = 1


def render_total_transform(state: BinomialState, variables: Sequence[str]) -> str:
    """Total transform of a chart, e.g. ``x^2*(y^2 - x)``."""
    bracket = render_bracket(state.a, state.b, state.rho_fraction, variables)
    if not any(state.c):
        return bracket
    return f"{render_monomial(state.c, variables)}*({bracket})"


def _one_based(center: Optional[Sequence[int]]) -> Optional[List[int]]:
    return None if center is None else [var + 1 for var in center]


class TreeExporter:
    """Serializes runs for files and terminals."""

    def __init__(self, config: Config):
        self.config = config
        self.logger = logging.getLogger(__name__)

        self.json_indent = config.get('export.json_indent', 2)
        self.csv_delimiter = config.get('export.csv_delimiter', ',')
        self.dot_rankdir = config.get('export.dot_rankdir', 'TB')

    # JSON

    def run_to_dict(
        self, result: RunResult, variables: Sequence[str], timestamps: bool = False
    ) -> Dict[str, Any]:
        """Schema v1 document for a single-binomial run."""
        data = {
            'version': SCHEMA_VERSION,
            'mode': int(result.mode),
            'n': result.root.state.n,
            'variables': list(variables),
            'rho': result.root.state.rho,
            'charts': [self._chart_entry(chart) for chart in result.charts],
            'stats': dict(result.stats),
        }
        if timestamps:
            data['generated'] = datetime.now().isoformat()
        return data

    def sequence_to_dict(
        self, result: SequenceResult, variables: Sequence[str], timestamps: bool = False
    ) -> Dict[str, Any]:
        """Schema v1 document for a sequential run; each chart lists every binomial."""
        data = {
            'version': SCHEMA_VERSION,
            'mode': int(result.mode),
            'n': len(variables),
            'variables': list(variables),
            'binomials': [
                {'A': list(f.a_raw), 'B': list(f.b_raw), 'rho': str(f.rho)} for f in result.binomials
            ],
            'charts': [self._multichart_entry(result, chart) for chart in result.charts],
            'stats': dict(result.stats),
        }
        if timestamps:
            data['generated'] = datetime.now().isoformat()
        return data

    def to_json_text(self, data: Dict[str, Any]) -> str:
        return json.dumps(data, indent=self.json_indent, sort_keys=True) + "\n"

    def write_text(self, text: str, path: Path) -> Path:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding='utf-8')
        except OSError as e:
            self.logger.error(f"Could not write {path}: {e}")
            raise
        self.logger.info(f"Wrote {path}")
        return path

    def _chart_entry(self, chart: Chart) -> Dict[str, Any]:
        state = chart.state
        return {
            'index': chart.index,
            'A': list(state.a),
            'B': list(state.b),
            'C': list(state.c),
            'E': list(state.e),
            'iota': None if chart.iota_val is None else list(chart.iota_val),
            'center': _one_based(chart.center),
            'parent': chart.parent,
            'ordinal': chart.ordinal,
            'finished': chart.finished,
        }

    def _multichart_entry(self, result: SequenceResult, chart: MultiChart) -> Dict[str, Any]:
        entry = {
            'index': chart.index,
            'phase': chart.active_index + 1,
            'E': list(chart.e),
            'states': [
                {'A': list(s.a), 'B': list(s.b), 'C': list(s.c)} for s in result.states(chart)
            ],
            'center': _one_based(chart.center),
            'parent': chart.parent,
            'ordinal': chart.ordinal,
            'final': chart.final,
        }
        if chart.is_leaf:
            entry['product_monomial'] = result.product_monomial(chart)
        return entry

    # DOT

    def run_to_dot(self, result: RunResult, variables: Sequence[str]) -> str:
        """Blowup tree with each chart labelled by its total transform."""
        return self._dot(
            result.charts,
            lambda chart: render_total_transform(chart.state, variables),
            lambda chart: chart.finished,
            lambda parent, chart: variables[parent.center[chart.ordinal - 1]],
            result.chart,
        )

    def sequence_to_dot(self, result: SequenceResult, variables: Sequence[str]) -> str:
        def label(chart: MultiChart) -> str:
            return " | ".join(render_total_transform(s, variables) for s in result.states(chart))

        return self._dot(
            result.charts,
            label,
            lambda chart: chart.is_leaf,
            lambda parent, chart: variables[parent.center[chart.ordinal - 1]],
            result.chart,
        )

    def _dot(
        self,
        charts: Sequence[Any],
        label: Callable[[Any], str],
        is_leaf: Callable[[Any], bool],
        chart_variable: Callable[[Any, Any], str],
        lookup: Callable[[int], Any],
    ) -> str:
        lines = [
            "digraph blowup_tree {",
            f"  rankdir={self.dot_rankdir};",
            "  node [shape=box];",
        ]
        for chart in charts:
            shape = ", peripheries=2" if is_leaf(chart) else ""
            lines.append(f'  c{chart.index} [label="{_escape(label(chart))}"{shape}];')
        for chart in charts:
            if chart.parent:
                parent = lookup(chart.parent)
                lines.append(
                    f'  c{chart.parent} -> c{chart.index} '
                    f'[label="D+({_escape(chart_variable(parent, chart))})"];'
                )
        lines.append("}")
        return "\n".join(lines) + "\n"

    # Tables

    def compare_table(self, results: Dict[Mode, RunResult]) -> pd.DataFrame:
        rows = [
            {
                'mode': int(mode),
                'strategy': mode.label,
                'leaves': result.leaf_count,
                'total': result.total,
                'depth': result.max_depth,
            }
            for mode, result in sorted(results.items())
        ]
        return pd.DataFrame(rows, columns=['mode', 'strategy', 'leaves', 'total', 'depth'])

    def write_csv(self, frame: pd.DataFrame, path: Path) -> Path:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            frame.to_csv(path, sep=self.csv_delimiter, index=False)
        except OSError as e:
            self.logger.error(f"Could not write {path}: {e}")
            raise
        self.logger.info(f"Wrote {len(frame)} rows to {path}")
        return path


def _escape(text: str) -> str:
    return text.replace('\\', '\\\\').replace('"', '\\"')

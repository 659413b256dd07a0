"""
Regression corpus

A corpus file lists binomials with the expected number of leaves and charts
per strategy, one row per line:

    [LABEL:] expr ; mode1=l/t ; mode2=l/t ; mode3=l/t ; mode4=l/t [; skip-modeK=reason] [; record-only]

Blank lines and ``#`` comments are ignored. The runner recomputes every cell
and reports the rows whose counts differ.
"""

import logging
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple

import pandas as pd

from monoforge.core.engine import Mode, monomialize
from monoforge.core.errors import CorpusFormatError
from monoforge.core.parser import parse
from monoforge.utils.config import Config

EXPECTATION = re.compile(r"mode([1-4])\s*=\s*(\d+)\s*/\s*(\d+)")
SKIP = re.compile(r"skip-mode([1-4])\s*=\s*(.+)")
LABEL = re.compile(r"([A-Za-z0-9_.\-]+)\s*:\s*(.*)")

SHIPPED_CORPORA = ('paper_fig2_3.corpus', 'paper_fig4.corpus')

Counts = Tuple[int, int]


@dataclass(frozen=True)
class CorpusEntry:
    label: str
    expression: str
    expected: Dict[Mode, Counts] = field(default_factory=dict)
    skips: Dict[Mode, str] = field(default_factory=dict)
    record_only: bool = False
    line: int = 0

    @property
    def modes(self) -> List[Mode]:
        """Modes to compute: the expected ones, or all of them for record-only rows."""
        if self.record_only and not self.expected:
            return list(Mode)
        return sorted(self.expected)


@dataclass(frozen=True)
class CellOutcome:
    label: str
    mode: Mode
    expected: Optional[Counts]
    got: Optional[Counts]
    depth: Optional[int]
    status: str  # pass, fail, skip or record

    @property
    def mismatch_line(self) -> str:
        expected = "-" if self.expected is None else f"{self.expected[0]}/{self.expected[1]}"
        got = "-" if self.got is None else f"{self.got[0]}/{self.got[1]}"
        return f"{self.label}, {int(self.mode)}, {expected}, {got}"


@dataclass
class BatchReport:
    outcomes: List[CellOutcome] = field(default_factory=list)

    @property
    def mismatches(self) -> List[CellOutcome]:
        return [outcome for outcome in self.outcomes if outcome.status == 'fail']

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def counts(self) -> Dict[str, int]:
        tally = {'pass': 0, 'fail': 0, 'skip': 0, 'record': 0}
        for outcome in self.outcomes:
            tally[outcome.status] += 1
        return tally

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {
                'row': o.label,
                'mode': int(o.mode),
                'expected_leaves': None if o.expected is None else o.expected[0],
                'expected_total': None if o.expected is None else o.expected[1],
                'leaves': None if o.got is None else o.got[0],
                'total': None if o.got is None else o.got[1],
                'depth': o.depth,
                'status': o.status,
            }
            for o in self.outcomes
        ]
        return pd.DataFrame(
            rows,
            columns=['row', 'mode', 'expected_leaves', 'expected_total',
                     'leaves', 'total', 'depth', 'status'],
        )


def parse_corpus_line(text: str, line: int) -> Optional[CorpusEntry]:
    """Entry for one corpus line, or None for blank and comment lines."""
    content = text.split('#', 1)[0].strip()
    if not content:
        return None

    segments = [segment.strip() for segment in content.split(';')]
    head = segments[0]
    label = str(line)
    match = LABEL.fullmatch(head)
    if match:
        label, head = match.group(1), match.group(2).strip()
    if not head:
        raise CorpusFormatError("missing expression", line)

    expected: Dict[Mode, Counts] = {}
    skips: Dict[Mode, str] = {}
    record_only = False
    for segment in segments[1:]:
        if not segment:
            continue
        if segment == 'record-only':
            record_only = True
        elif m := EXPECTATION.fullmatch(segment):
            expected[Mode(int(m.group(1)))] = (int(m.group(2)), int(m.group(3)))
        elif m := SKIP.fullmatch(segment):
            skips[Mode(int(m.group(1)))] = m.group(2).strip()
        else:
            raise CorpusFormatError(f"cannot read segment {segment!r}", line)

    if not expected and not record_only:
        raise CorpusFormatError("row has neither expectations nor a record-only marker", line)
    return CorpusEntry(label, head, expected, skips, record_only, line)


def parse_corpus(lines: Iterable[str]) -> List[CorpusEntry]:
    entries = []
    for number, text in enumerate(lines, start=1):
        entry = parse_corpus_line(text, number)
        if entry is not None:
            entries.append(entry)
    return entries


def load_corpus(path: Path) -> List[CorpusEntry]:
    with open(path, 'r', encoding='utf-8') as f:
        return parse_corpus(f)


def shipped_corpus(name: str) -> List[CorpusEntry]:
    """One of the corpora bundled with the package, by file name."""
    text = resources.files('monoforge').joinpath('corpus').joinpath(name).read_text(encoding='utf-8')
    return parse_corpus(text.splitlines())


def count_charts(expression: str, mode: int) -> Tuple[int, int, int]:
    """(leaves, total, depth) for one corpus cell; top-level so worker processes can run it."""
    parsed = parse(expression)
    result = monomialize(parsed.a_raw, parsed.b_raw, Mode(mode), parsed.rho)
    return result.leaf_count, result.total, result.max_depth


class CorpusRunner:
    """Recomputes corpus rows and compares them with their expectations."""

    def __init__(self, config: Config):
        self.config = config
        self.logger = logging.getLogger(__name__)
        self.threads = config.threads
        self.run_skipped = config.get('corpus.run_skipped', True)

    def run(self, entries: List[CorpusEntry], modes: Optional[Iterable[Mode]] = None) -> BatchReport:
        """
        Compute every requested cell; the report follows corpus order.

        Args:
            entries: Parsed corpus rows
            modes: Restrict to these strategies (default: every cell of each row)
        """
        wanted = None if modes is None else {Mode(m) for m in modes}
        cells = [
            (entry, mode)
            for entry in entries
            for mode in entry.modes
            if wanted is None or mode in wanted
        ]
        todo = [
            (entry.expression, int(mode))
            for entry, mode in cells
            if mode not in entry.skips or self.run_skipped
        ]
        self.logger.info(f"Running {len(todo)} corpus cells with {self.threads} worker(s)")

        if self.threads > 1 and len(todo) > 1:
            with ProcessPoolExecutor(max_workers=self.threads) as pool:
                computed = list(pool.map(count_charts, *zip(*todo)))
        else:
            computed = [count_charts(expression, mode) for expression, mode in todo]

        report = BatchReport()
        results = iter(computed)
        for entry, mode in cells:
            got = None
            depth = None
            if mode not in entry.skips or self.run_skipped:
                leaves, total, depth = next(results)
                got = (leaves, total)
            report.outcomes.append(self._judge(entry, mode, got, depth))

        tally = report.counts()
        self.logger.info(
            f"Corpus: {tally['pass']} passed, {tally['fail']} failed, "
            f"{tally['skip']} skipped, {tally['record']} recorded"
        )
        for outcome in report.mismatches:
            self.logger.warning(f"Mismatch: {outcome.mismatch_line}")
        return report

    def _judge(self, entry: CorpusEntry, mode: Mode, got: Optional[Counts], depth: Optional[int]) -> CellOutcome:
        expected = entry.expected.get(mode)
        if mode in entry.skips:
            self.logger.debug(f"Row {entry.label} mode {int(mode)} skipped: {entry.skips[mode]}")
            status = 'skip'
        elif expected is None:
            status = 'record'
        else:
            status = 'pass' if got == expected else 'fail'
        return CellOutcome(entry.label, mode, expected, got, depth, status)

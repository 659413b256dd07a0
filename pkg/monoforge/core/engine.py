"""
Blowup engine

Builds the chart tree of a binomial by repeated local blowups. Charts are
kept in one list in the order they are created; the loop walks that list
front to back. The root has index 1 and every successor is appended when
its parent is visited, so indices are stable across runs.
"""

import logging
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from monoforge.core.binomial import (
    BinomialState,
    Coefficient,
    IotaTuple,
    lift,
)
from monoforge.core.centers import (
    Center,
    center_codim2,
    center_exceptional,
    center_maxord,
    center_mincodim,
)
from monoforge.core.errors import InvalidChart
from monoforge.utils.config import Config

logger = logging.getLogger(__name__)

ROOT_PATH_ENTRY = (0, -1)


class Mode(IntEnum):
    """Center selection strategy."""

    MAXORD = 1
    CODIM2 = 2
    MINCODIM = 3
    EXCEPTIONAL = 4

    @property
    def label(self) -> str:
        return _MODE_LABELS[self]

    @classmethod
    def parse(cls, text) -> "Mode":
        """Accept ``1``-``4`` or a strategy name such as ``codim2``."""
        if isinstance(text, Mode):
            return text
        key = str(text).strip().lower()
        if key in _MODE_ALIASES:
            return _MODE_ALIASES[key]
        raise ValueError(f"unknown mode {text!r}; expected 1-4 or one of {sorted(_MODE_ALIASES)}")


_MODE_LABELS = {
    Mode.MAXORD: "max.ord.",
    Mode.CODIM2: "codim.2",
    Mode.MINCODIM: "min.codim",
    Mode.EXCEPTIONAL: "exc.",
}

_MODE_ALIASES = {
    "1": Mode.MAXORD, "maxord": Mode.MAXORD,
    "2": Mode.CODIM2, "codim2": Mode.CODIM2,
    "3": Mode.MINCODIM, "mincodim": Mode.MINCODIM,
    "4": Mode.EXCEPTIONAL, "exc": Mode.EXCEPTIONAL, "exceptional": Mode.EXCEPTIONAL,
}

CENTER_STRATEGIES: Dict[Mode, Callable[[BinomialState], Center]] = {
    Mode.MAXORD: center_maxord,
    Mode.CODIM2: center_codim2,
    Mode.MINCODIM: center_mincodim,
    Mode.EXCEPTIONAL: center_exceptional,
}


def check_finished(state: BinomialState) -> bool:
    """
    True when the total transform is visibly locally monomial.

    That is the case when one monomial is constant, or when one monomial is a
    single variable x_i that does not divide the monomial factor x^C.
    """
    sa, sb = state.degree_a, state.degree_b
    if min(sa, sb) == 0:
        return True
    if sa == 1 and any(a == 1 and c == 0 for a, c in zip(state.a, state.c)):
        return True
    if sb == 1 and any(b == 1 and c == 0 for b, c in zip(state.b, state.c)):
        return True
    return False


def transform(state: BinomialState, center: Sequence[int], var: int) -> BinomialState:
    """
    State in the chart of ``var`` after blowing up ``center``.

    Raises:
        InvalidChart: ``var`` is not in the center or the center has fewer than two members
    """
    if len(set(center)) < 2:
        raise InvalidChart(f"center {tuple(center)} must contain at least two variables")
    if var not in center:
        raise InvalidChart(f"chart variable {var} is not in the center {tuple(center)}")

    a, b, c = lift(state.a, center, var), lift(state.b, center, var), lift(state.c, center, var)
    delta = min(a[var], b[var])

    a = a[:var] + (a[var] - delta,) + a[var + 1:]
    b = b[:var] + (b[var] - delta,) + b[var + 1:]
    c = c[:var] + (c[var] + delta,) + c[var + 1:]
    e = state.e[:var] + (1,) + state.e[var + 1:]
    return BinomialState(a, b, c, e, state.rho)


def compute_center(state: BinomialState, mode: Mode) -> Center:
    return CENTER_STRATEGIES[Mode(mode)](state)


@dataclass(frozen=True, slots=True)
class Chart:
    """
    One node of the blowup tree.

    Only the last column of the path is stored (``parent``, ``ordinal``);
    ``RunResult.path`` rebuilds the full history.
    """

    index: int
    state: BinomialState
    iota_val: Optional[IotaTuple]
    center: Optional[Center]
    parent: int
    ordinal: int
    depth: int

    @property
    def finished(self) -> bool:
        return self.center is None


@dataclass
class RunResult:
    """Ordered chart list of one run plus summary statistics."""

    charts: List[Chart]
    mode: Mode
    stats: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.stats:
            self.stats = {
                'total': len(self.charts),
                'leaves': sum(1 for chart in self.charts if chart.finished),
                'max_depth': max((chart.depth for chart in self.charts), default=0),
            }

    @property
    def root(self) -> Chart:
        return self.charts[0]

    @property
    def total(self) -> int:
        return self.stats['total']

    @property
    def leaf_count(self) -> int:
        return self.stats['leaves']

    @property
    def max_depth(self) -> int:
        return self.stats['max_depth']

    def chart(self, index: int) -> Chart:
        """Chart by its 1-based index."""
        return self.charts[index - 1]

    def path(self, index: int) -> List[Tuple[int, int]]:
        """Path columns from the root to chart ``index``, starting with (0, -1)."""
        columns = []
        chart = self.chart(index)
        while chart.parent:
            columns.append((chart.parent, chart.ordinal))
            chart = self.chart(chart.parent)
        columns.append(ROOT_PATH_ENTRY)
        return columns[::-1]

    def children(self, index: int) -> List[Chart]:
        return [chart for chart in self.charts if chart.parent == index]

    def leaves(self) -> List[Chart]:
        return [chart for chart in self.charts if chart.finished]

    def level(self, depth: int) -> List[Chart]:
        return [chart for chart in self.charts if chart.depth == depth]


def make_chart(state: BinomialState, mode: Mode, index: int, parent: int, ordinal: int, depth: int) -> Chart:
    if check_finished(state):
        return Chart(index, state, None, None, parent, ordinal, depth)
    return Chart(index, state, state.iota, compute_center(state, mode), parent, ordinal, depth)


def expand(root: BinomialState, mode: Mode) -> List[Chart]:
    """Run the worklist loop from ``root`` and return every chart in creation order."""
    charts = [make_chart(root, mode, 1, 0, ROOT_PATH_ENTRY[1], 0)]
    position = 0
    while position < len(charts):
        chart = charts[position]
        if chart.center is not None:
            for ordinal, var in enumerate(chart.center, start=1):
                child = transform(chart.state, chart.center, var)
                charts.append(
                    make_chart(child, mode, len(charts) + 1, chart.index, ordinal, chart.depth + 1)
                )
        position += 1
    return charts


def monomialize(
    a_raw: Sequence[int], b_raw: Sequence[int], mode: Mode, rho: Coefficient = 1
) -> RunResult:
    """
    Monomialize x^a_raw - rho x^b_raw with the given center strategy.

    Raises:
        DegenerateZero: the two monomials coincide and rho is 1
        DimensionMismatch: the exponent vectors differ in length
    """
    mode = Mode(mode)
    root = BinomialState.from_raw(a_raw, b_raw, rho)
    return RunResult(expand(root, mode), mode)


class Monomializer:
    """Configured front door to the engine, used by the CLI commands."""

    def __init__(self, config: Config):
        self.config = config
        self.logger = logging.getLogger(__name__)
        self.default_mode = Mode.parse(config.get('engine.default_mode', 2))

    def run(
        self,
        a_raw: Sequence[int],
        b_raw: Sequence[int],
        mode: Optional[Mode] = None,
        rho: Coefficient = 1,
    ) -> RunResult:
        mode = self.default_mode if mode is None else Mode.parse(mode)
        self.logger.debug(f"Monomializing A={tuple(a_raw)} B={tuple(b_raw)} in mode {mode.label}")

        result = monomialize(a_raw, b_raw, mode, rho)

        self.logger.info(
            f"mode {int(mode)}: {result.leaf_count} leaves, {result.total} charts, "
            f"depth {result.max_depth}"
        )
        return result

    def compare(
        self, a_raw: Sequence[int], b_raw: Sequence[int], rho: Coefficient = 1
    ) -> Dict[Mode, RunResult]:
        """Run all four strategies on the same input."""
        return {mode: self.run(a_raw, b_raw, mode, rho) for mode in Mode}

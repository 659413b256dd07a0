"""
Sequential monomialization of several binomials.

The binomials are handled one after another: the first unfinished one drives
the blowups until it is finished, then the next one takes over in the same
chart. Every binomial is carried as its raw total transform, so a binomial
becomes active with all exceptional factors picked up so far.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from monoforge.core.binomial import (
    BinomialState,
    Coefficient,
    ExponentVector,
    check_dimensions,
    exponent_vector,
    lift,
    normalize,
    zero_vector,
)
from monoforge.core.centers import Center
from monoforge.core.engine import ROOT_PATH_ENTRY, Mode, check_finished, compute_center
from monoforge.core.errors import DimensionMismatch

logger = logging.getLogger(__name__)

RawPair = Tuple[ExponentVector, ExponentVector]


@dataclass(frozen=True)
class RawBinomial:
    a_raw: ExponentVector
    b_raw: ExponentVector
    rho: Coefficient = 1


@dataclass(frozen=True, slots=True)
class MultiChart:
    """
    A chart of a sequential run.

    ``active_index`` is the 0-based position of the binomial driving the
    blowup here; it equals the number of binomials in a leaf.
    """

    index: int
    raws: Tuple[RawPair, ...]
    active_index: int
    state: Optional[BinomialState]
    center: Optional[Center]
    e: ExponentVector
    parent: int
    ordinal: int
    depth: int
    final: bool

    @property
    def is_leaf(self) -> bool:
        return self.center is None


@dataclass
class SequenceResult:
    charts: List[MultiChart]
    mode: Mode
    binomials: List[RawBinomial]
    stats: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.stats:
            self.stats = {
                'total': len(self.charts),
                'leaves': sum(1 for chart in self.charts if chart.is_leaf),
                'final': sum(1 for chart in self.charts if chart.final),
                'max_depth': max((chart.depth for chart in self.charts), default=0),
            }

    def chart(self, index: int) -> MultiChart:
        return self.charts[index - 1]

    def path(self, index: int) -> List[Tuple[int, int]]:
        columns = []
        chart = self.chart(index)
        while chart.parent:
            columns.append((chart.parent, chart.ordinal))
            chart = self.chart(chart.parent)
        columns.append(ROOT_PATH_ENTRY)
        return columns[::-1]

    def states(self, chart: MultiChart) -> List[BinomialState]:
        """Normalized state of every binomial in ``chart``."""
        return [
            BinomialState.from_raw(a, b, binomial.rho, e=chart.e)
            for (a, b), binomial in zip(chart.raws, self.binomials)
        ]

    def leaves(self) -> List[MultiChart]:
        return [chart for chart in self.charts if chart.is_leaf]

    def product_monomial(self, chart: MultiChart) -> bool:
        """
        Whether the product of all binomials is visibly locally monomial in ``chart``.

        Holds when at most one bracket is not a unit and that bracket, taken
        with the monomial factor of the whole product, passes the finished test.
        """
        states = self.states(chart)
        factor = zero_vector(len(chart.e))
        for state in states:
            factor = tuple(x + y for x, y in zip(factor, state.c))
        brackets = [state for state in states if not state.is_unit]
        if not brackets:
            return True
        if len(brackets) > 1:
            return False
        bracket = brackets[0]
        return check_finished(BinomialState(bracket.a, bracket.b, factor, chart.e, bracket.rho))


def _activate(
    raws: Sequence[RawPair], binomials: Sequence[RawBinomial], start: int, e: ExponentVector
) -> Tuple[int, Optional[BinomialState]]:
    """First binomial at or after ``start`` that is unfinished in this chart."""
    for position in range(start, len(raws)):
        a, b = raws[position]
        state = BinomialState.from_raw(a, b, binomials[position].rho, e=e)
        if not check_finished(state):
            return position, state
    return len(raws), None


def _all_finished(raws: Sequence[RawPair], binomials: Sequence[RawBinomial], e: ExponentVector) -> bool:
    return all(
        check_finished(BinomialState.from_raw(a, b, binomial.rho, e=e))
        for (a, b), binomial in zip(raws, binomials)
    )


def _make_chart(
    raws: Tuple[RawPair, ...],
    binomials: Sequence[RawBinomial],
    start: int,
    e: ExponentVector,
    mode: Mode,
    index: int,
    parent: int,
    ordinal: int,
    depth: int,
) -> MultiChart:
    active, state = _activate(raws, binomials, start, e)
    if state is None:
        final = _all_finished(raws, binomials, e)
        return MultiChart(index, raws, active, None, None, e, parent, ordinal, depth, final)
    center = compute_center(state, mode)
    return MultiChart(index, raws, active, state, center, e, parent, ordinal, depth, False)


def sequential_monomialize(binomials: Sequence[RawBinomial], mode: Mode) -> SequenceResult:
    """
    Monomialize ``binomials`` one after another in every chart.

    Raises:
        ValueError: the list is empty
        DimensionMismatch: the binomials live in different numbers of variables
        DegenerateZero: a binomial is identically zero
    """
    if not binomials:
        raise ValueError("at least one binomial is required")
    mode = Mode(mode)
    binomials = [
        RawBinomial(exponent_vector(f.a_raw), exponent_vector(f.b_raw), f.rho) for f in binomials
    ]
    try:
        n = check_dimensions(*(v for f in binomials for v in (f.a_raw, f.b_raw)))
    except DimensionMismatch:
        logger.error("Binomials of a sequence must share one variable space")
        raise

    for f in binomials:
        normalize(f.a_raw, f.b_raw, f.rho)

    raws = tuple((f.a_raw, f.b_raw) for f in binomials)
    charts = [
        _make_chart(raws, binomials, 0, zero_vector(n), mode, 1, 0, ROOT_PATH_ENTRY[1], 0)
    ]
    position = 0
    while position < len(charts):
        chart = charts[position]
        if chart.center is not None:
            for ordinal, var in enumerate(chart.center, start=1):
                child_raws = tuple(
                    (lift(a, chart.center, var), lift(b, chart.center, var)) for a, b in chart.raws
                )
                child_e = chart.e[:var] + (1,) + chart.e[var + 1:]
                charts.append(
                    _make_chart(
                        child_raws, binomials, chart.active_index, child_e, mode,
                        len(charts) + 1, chart.index, ordinal, chart.depth + 1,
                    )
                )
        position += 1

    result = SequenceResult(charts, mode, binomials)
    logger.info(
        f"sequence of {len(binomials)} in mode {int(mode)}: "
        f"{result.stats['final']} final, {result.stats['total']} charts"
    )
    return result

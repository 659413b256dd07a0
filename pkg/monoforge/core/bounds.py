"""
Worst-case bounds for the chart tree.

Upper bounds on the longest root-to-leaf path and on the number of charts,
as functions of the root binomial and the strategy. Python integers carry
the (often huge) chart bounds exactly.
"""

from dataclasses import asdict, dataclass
from typing import Any, Dict, Tuple

from monoforge.core.binomial import BinomialState
from monoforge.core.engine import Mode, RunResult, check_finished

CHART_BASE = {
    Mode.CODIM2: 2,
    Mode.MINCODIM: 4,
    Mode.EXCEPTIONAL: 4,
}


def maxord_depth(low: int, high: int) -> int:
    """Longest path bound for maximal-order centers with inv = (low, high)."""
    correction = sum(2 ** (low - step - 1) * (low - step + 1) for step in range(1, low))
    return 2 ** (low - 1) * high + low - 1 - correction


def depth_bound(state: BinomialState, mode: Mode) -> Tuple[int, bool]:
    """
    Return ``(bound, applicable)``.

    For modes 2-4 the closed formula only holds when both maximal exponents
    are at least 2; otherwise the count of maximal entries plus one is
    returned with ``applicable`` set to False.

    The bounds are proved for a bare binomial. A root with a monomial factor
    can need extra blowups after iota bottoms out, so any non-zero ``c``
    also clears ``applicable``.
    """
    if check_finished(state):
        return 0, True

    bare = not any(state.c)
    mode = Mode(mode)
    if mode is Mode.MAXORD:
        low, high = state.inv
        return maxord_depth(low, high), bare

    alpha, alpha_count, beta, beta_count = state.iota
    if min(alpha, beta) >= 2:
        return (alpha + beta - 4) * (state.n - 1) + alpha_count + beta_count + 1, bare
    return alpha_count + beta_count + 1, False


def chart_bound(state: BinomialState, mode: Mode) -> int:
    depth, _ = depth_bound(state, mode)
    base = state.n if Mode(mode) is Mode.MAXORD else CHART_BASE[Mode(mode)]
    return base ** depth


@dataclass(frozen=True)
class BoundReport:
    mode: Mode
    depth_bound: int
    chart_bound: int
    depth_actual: int
    total_actual: int
    bound_applicable: bool

    @property
    def holds(self) -> bool:
        return self.depth_actual <= self.depth_bound and self.total_actual <= self.chart_bound

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['mode'] = int(self.mode)
        data['holds'] = self.holds
        return data


def bound_report(result: RunResult) -> BoundReport:
    """Compare a finished run against the bounds of its root."""
    root = result.root.state
    depth, applicable = depth_bound(root, result.mode)
    return BoundReport(
        mode=result.mode,
        depth_bound=depth,
        chart_bound=chart_bound(root, result.mode),
        depth_actual=result.max_depth,
        total_actual=result.total,
        bound_applicable=applicable,
    )

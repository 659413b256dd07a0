"""
Invariant checks on random states and on whole runs.

Used by the test suite and by ``monoforge verify``. Every checker returns a
list of human-readable violations; an empty list means the state or run is
sound.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from monoforge.core.binomial import BinomialState, ExponentVector
from monoforge.core.bounds import depth_bound
from monoforge.core.engine import Mode, RunResult, check_finished, compute_center, monomialize, transform
from monoforge.utils.config import Config

logger = logging.getLogger(__name__)


def random_raw_pair(
    rng: np.random.Generator, max_n: int = 6, max_entry: int = 6
) -> Tuple[ExponentVector, ExponentVector]:
    """Two distinct raw exponent vectors in at least two variables."""
    while True:
        n = int(rng.integers(2, max_n + 1))
        a_raw = tuple(int(v) for v in rng.integers(0, max_entry + 1, size=n))
        b_raw = tuple(int(v) for v in rng.integers(0, max_entry + 1, size=n))
        if a_raw != b_raw:
            return a_raw, b_raw


def random_state(rng: np.random.Generator, max_n: int = 6, max_entry: int = 6) -> BinomialState:
    """
    A random normalized state with at least two variables.

    Raw exponents, an extra monomial factor and the exceptional marker are
    drawn independently; draws where both monomials coincide are repeated.
    """
    a_raw, b_raw = random_raw_pair(rng, max_n, max_entry)
    n = len(a_raw)
    c = tuple(int(v) for v in rng.integers(0, 3, size=n))
    e = tuple(int(v) for v in rng.integers(0, 2, size=n))
    return BinomialState.from_raw(a_raw, b_raw, c=c, e=e)


def substitute(state: BinomialState, center: Sequence[int], var: int) -> BinomialState:
    """
    Chart ``var`` of the blowup computed by literal substitution.

    Applies x_j -> x_var * x_j to both monomials and the monomial factor, then
    moves the componentwise common part of the two monomials into the factor.
    """
    def substituted(exponents: ExponentVector) -> List[int]:
        out = list(exponents)
        for j in center:
            if j != var:
                out[var] += exponents[j]
        return out

    a, b, c = substituted(state.a), substituted(state.b), substituted(state.c)
    common = [min(x, y) for x, y in zip(a, b)]
    e = list(state.e)
    e[var] = 1
    return BinomialState(
        tuple(x - g for x, g in zip(a, common)),
        tuple(y - g for y, g in zip(b, common)),
        tuple(z + g for z, g in zip(c, common)),
        tuple(e),
        state.rho,
    )


def edge_violations(state: BinomialState, mode: Mode) -> List[str]:
    """Check one blowup step of ``state`` under ``mode``."""
    if check_finished(state):
        return []

    problems = []
    center = compute_center(state, mode)
    if len(center) < 2:
        problems.append(f"center {center} has fewer than two variables")
    if mode is Mode.CODIM2 and len(center) != 2:
        problems.append(f"codimension-two center {center} has {len(center)} variables")
    if mode in (Mode.MINCODIM, Mode.EXCEPTIONAL) and not 2 <= len(center) <= 4:
        problems.append(f"center {center} has {len(center)} variables")
    if any(state.a[i] + state.b[i] == 0 for i in center):
        problems.append(f"center {center} contains a variable absent from both monomials")

    if mode is Mode.MAXORD:
        order = min(state.degree_a, state.degree_b)
        if min(sum(state.a[i] for i in center), sum(state.b[i] for i in center)) != order:
            problems.append(f"center {center} is not in the locus of maximal order")
        for j in center:
            rest = [i for i in center if i != j]
            if min(sum(state.a[i] for i in rest), sum(state.b[i] for i in rest)) >= order:
                problems.append(f"center {center} stays of maximal order without {j}")

    for var in center:
        child = transform(state, center, var)
        where = f"chart {var} of {center}"
        if child != substitute(state, center, var):
            problems.append(f"{where}: transform disagrees with substitution")
        if any(x and y for x, y in zip(child.a, child.b)):
            problems.append(f"{where}: monomials share a variable")
        if any(old > new for old, new in zip(state.e, child.e)):
            problems.append(f"{where}: exceptional marker lost")
        if mode is Mode.MAXORD:
            if not child.inv < state.inv:
                problems.append(f"{where}: inv {tuple(child.inv)} does not drop below {tuple(state.inv)}")
        elif not child.iota < state.iota:
            problems.append(f"{where}: iota {tuple(child.iota)} does not drop below {tuple(state.iota)}")
    return problems


def run_violations(result: RunResult) -> List[str]:
    """Structural checks of a finished run, plus the depth bound when it applies."""
    problems = []
    ordinals: Dict[int, List[int]] = {}
    for chart in result.charts[1:]:
        ordinals.setdefault(chart.parent, []).append(chart.ordinal)
        if chart.parent >= chart.index:
            problems.append(f"chart {chart.index}: parent {chart.parent} does not precede it")

    for chart in result.charts:
        if chart.finished != check_finished(chart.state):
            problems.append(f"chart {chart.index}: finished flag disagrees with state")
        expected = [] if chart.center is None else list(range(1, len(chart.center) + 1))
        if ordinals.get(chart.index, []) != expected:
            problems.append(f"chart {chart.index}: successors are not numbered 1..{len(expected)}")

    bound, applicable = depth_bound(result.root.state, result.mode)
    if applicable and result.max_depth > bound:
        problems.append(f"depth {result.max_depth} exceeds bound {bound}")
    return problems


@dataclass
class PropertyReport:
    samples: int
    checked_edges: int = 0
    checked_runs: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


class PropertySuite:
    """Random sampling driver for the invariant checks."""

    def __init__(self, config: Optional[Config] = None, seed: int = 0):
        self.config = config or Config.default()
        self.logger = logging.getLogger(__name__)
        self.rng = np.random.default_rng(seed)

    def check_edges(self, samples: int, max_n: int = 6, max_entry: int = 6) -> PropertyReport:
        """One blowup step under every mode for ``samples`` random states."""
        report = PropertyReport(samples)
        for sample in range(samples):
            state = random_state(self.rng, max_n, max_entry)
            for mode in Mode:
                for problem in edge_violations(state, mode):
                    report.violations.append(f"sample {sample} {state} mode {int(mode)}: {problem}")
                report.checked_edges += 1
        self._log(report)
        return report

    def check_runs(self, samples: int, max_n: int = 4, max_entry: int = 3) -> PropertyReport:
        """Full runs on smaller random states."""
        report = PropertyReport(samples)
        for sample in range(samples):
            a_raw, b_raw = random_raw_pair(self.rng, max_n, max_entry)
            root = BinomialState.from_raw(a_raw, b_raw)
            for mode in Mode:
                result = monomialize(a_raw, b_raw, mode)
                for problem in run_violations(result):
                    report.violations.append(f"sample {sample} {root} mode {int(mode)}: {problem}")
                report.checked_runs += 1
        self._log(report)
        return report

    def _log(self, report: PropertyReport) -> None:
        if report.passed:
            self.logger.info(
                f"{report.samples} samples: {report.checked_edges} steps and "
                f"{report.checked_runs} runs without violations"
            )
        else:
            self.logger.error(f"{len(report.violations)} violations in {report.samples} samples")
            for violation in report.violations[:20]:
                self.logger.error(f"  - {violation}")


def summarize(reports: Sequence[PropertyReport]) -> Dict[str, int]:
    return {
        'samples': sum(r.samples for r in reports),
        'edges': sum(r.checked_edges for r in reports),
        'runs': sum(r.checked_runs for r in reports),
        'violations': sum(len(r.violations) for r in reports),
    }

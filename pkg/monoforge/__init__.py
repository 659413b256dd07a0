"""
monoforge

Monomialization of binomials x^A - rho x^B by sequences of local blowups,
with four center selection strategies, worst-case bounds, sequential runs
over several binomials and a regression corpus of published chart counts.
"""

__version__ = "1.0.0"

from .core.binomial import BinomialState, normalize, iota, inv_pair
from .core.engine import Mode, Chart, RunResult, Monomializer, check_finished, transform, monomialize
from .core.bounds import BoundReport, depth_bound, chart_bound, bound_report
from .core.multirun import RawBinomial, sequential_monomialize
from .core.parser import ParsedBinomial, parse, parse_system, render
from .core.exporter import TreeExporter
from .core.corpus import CorpusRunner, load_corpus

__all__ = [
    "BinomialState",
    "normalize",
    "iota",
    "inv_pair",
    "Mode",
    "Chart",
    "RunResult",
    "Monomializer",
    "check_finished",
    "transform",
    "monomialize",
    "BoundReport",
    "depth_bound",
    "chart_bound",
    "bound_report",
    "RawBinomial",
    "sequential_monomialize",
    "ParsedBinomial",
    "parse",
    "parse_system",
    "render",
    "TreeExporter",
    "CorpusRunner",
    "load_corpus",
]

"""
Core module package initialization
"""

from .binomial import BinomialState, IotaTuple, InvPair, normalize, iota, inv_pair
from .centers import center_maxord, center_codim2, center_mincodim, center_exceptional
from .engine import Mode, Chart, RunResult, Monomializer, check_finished, transform, monomialize
from .bounds import BoundReport, depth_bound, chart_bound, bound_report
from .multirun import MultiChart, RawBinomial, SequenceResult, sequential_monomialize
from .parser import ParsedBinomial, parse, parse_system, render
from .exporter import TreeExporter
from .corpus import CorpusEntry, CorpusRunner, load_corpus

__all__ = [
    "BinomialState",
    "IotaTuple",
    "InvPair",
    "normalize",
    "iota",
    "inv_pair",
    "center_maxord",
    "center_codim2",
    "center_mincodim",
    "center_exceptional",
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
    "MultiChart",
    "RawBinomial",
    "SequenceResult",
    "sequential_monomialize",
    "ParsedBinomial",
    "parse",
    "parse_system",
    "render",
    "TreeExporter",
    "CorpusEntry",
    "CorpusRunner",
    "load_corpus",
]

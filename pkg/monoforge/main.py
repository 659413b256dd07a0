"""
Main CLI Entry Point for monoforge

Usage:
    monoforge monomialize "x1*x2 - x3*x4" --mode 2 [--json PATH] [--dot PATH]
    monoforge compare "x1*x2*x3 - x4*x5*x6" [--csv PATH]
    monoforge batch corpus.txt --check [--csv PATH]
    monoforge bounds "x1*x2 - x3*x4" --mode 1 [--json PATH]
    monoforge sequence "v^2 - y^4*z" "x^2*y - z^3" --vars x,y,z,v --order 2,1
    monoforge verify --samples 10000 --seed 0
"""

import sys
import argparse
import json
import logging
from pathlib import Path
from typing import List, Optional, Sequence

from monoforge.core.bounds import bound_report
from monoforge.core.corpus import SHIPPED_CORPORA, CorpusRunner, load_corpus, shipped_corpus
from monoforge.core.engine import Mode, Monomializer
from monoforge.core.errors import CorpusFormatError, EngineError, ParseError
from monoforge.core.exporter import TreeExporter
from monoforge.core.multirun import RawBinomial, sequential_monomialize
from monoforge.core.parser import INDEXED_NAME, parse, parse_system
from monoforge.core.properties import PropertySuite, summarize
from monoforge.utils.config import Config
from monoforge.utils.logger import configure_from_config, setup_logging

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2
EXIT_ENGINE = 3
EXIT_MISMATCH = 4

STDOUT = '-'


def create_parser() -> argparse.ArgumentParser:
    """Create the command line argument parser."""
    parser = argparse.ArgumentParser(
        prog="monoforge",
        description="Monomialize binomials by local blowups and compare center strategies",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Modes:
  1 maxord     centers in the locus of maximal order
  2 codim2     codimension-two centers
  3 mincodim   centers of minimal codimension in the singular locus
  4 exc        codimension two through exceptional divisors when possible

Examples:
  monoforge monomialize "x1*x2 - x3*x4*x5" --mode 2
  monoforge monomialize "y^2 - x^3" --vars x,y --mode 2 --dot tree.dot
  monoforge compare "x1^2 - x2^2*x3"
  monoforge batch --shipped --check
  monoforge sequence "v^2 - y^4*z" "x^2*y - z^3" --vars x,y,z,v --mode 2
        """
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", "-v", action="store_true", help="Enable verbose logging")
    common.add_argument("--config", "-c", type=Path, help="Path to configuration file")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    run_parser = subparsers.add_parser(
        "monomialize", aliases=["run"], parents=[common],
        help="Monomialize one binomial"
    )
    run_parser.add_argument("expression", help="Binomial such as 'x1^3*x2^2 - x3^5*x4'")
    _add_mode(run_parser)
    _add_vars(run_parser)
    run_parser.add_argument(
        "--json", nargs="?", const=STDOUT, metavar="PATH",
        help="Write the chart list as JSON (stdout when no path is given)"
    )
    run_parser.add_argument(
        "--dot", nargs="?", const=STDOUT, metavar="PATH",
        help="Write the blowup tree in Graphviz DOT format"
    )
    run_parser.add_argument(
        "--timestamps", action="store_true", help="Include a generation timestamp in JSON output"
    )

    compare_parser = subparsers.add_parser(
        "compare", parents=[common], help="Run all four strategies on one binomial"
    )
    compare_parser.add_argument("expression", help="Binomial expression")
    _add_vars(compare_parser)
    compare_parser.add_argument("--csv", type=Path, help="Also write the table as CSV")

    batch_parser = subparsers.add_parser(
        "batch", parents=[common], help="Recompute a corpus of binomials with expected counts"
    )
    batch_parser.add_argument("corpus", type=Path, nargs="?", help="Corpus file")
    batch_parser.add_argument(
        "--shipped", action="store_true", help="Use the corpora bundled with monoforge"
    )
    batch_parser.add_argument(
        "--check", action="store_true", help="Exit with status 4 when a count differs"
    )
    batch_parser.add_argument(
        "--modes", help="Comma-separated strategies to run (default: all listed cells)"
    )
    batch_parser.add_argument("--csv", type=Path, help="Write the full report as CSV")

    bounds_parser = subparsers.add_parser(
        "bounds", parents=[common], help="Compare a run against its worst-case bounds"
    )
    bounds_parser.add_argument("expression", help="Binomial expression")
    _add_mode(bounds_parser)
    _add_vars(bounds_parser)
    bounds_parser.add_argument(
        "--json", nargs="?", const=STDOUT, metavar="PATH", help="Write the report as JSON"
    )

    sequence_parser = subparsers.add_parser(
        "sequence", parents=[common], help="Monomialize several binomials one after another",
        description=(
            "Monomialize several binomials one after another. Without --vars, names other "
            "than x1, x2, ... take slots in order of first appearance, which changes the "
            "tree; pass --vars (e.g. x,y,z,v) to fix the slot order."
        ),
    )
    sequence_parser.add_argument("expressions", nargs="+", help="Binomial expressions")
    _add_mode(sequence_parser)
    _add_vars(sequence_parser)
    sequence_parser.add_argument(
        "--order", help="Comma-separated 1-based permutation of the expressions, e.g. 2,1"
    )
    sequence_parser.add_argument(
        "--json", nargs="?", const=STDOUT, metavar="PATH", help="Write the chart list as JSON"
    )
    sequence_parser.add_argument(
        "--dot", nargs="?", const=STDOUT, metavar="PATH", help="Write the tree in DOT format"
    )
    sequence_parser.add_argument(
        "--timestamps", action="store_true", help="Include a generation timestamp in JSON output"
    )

    verify_parser = subparsers.add_parser(
        "verify", parents=[common], help="Check the engine invariants on random binomials"
    )
    verify_parser.add_argument("--samples", type=int, default=10000, help="Random states per check")
    verify_parser.add_argument("--runs", type=int, default=200, help="Random full runs")
    verify_parser.add_argument("--seed", type=int, default=0, help="Random seed")

    return parser


def _add_mode(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--mode", "-m", type=Mode.parse, default=None,
        help="Center strategy: 1-4 or maxord, codim2, mincodim, exc (default from config)"
    )


def _add_vars(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--vars", help="Comma-separated variable order, e.g. x,y,z,v"
    )


def _variable_order(args) -> Optional[List[str]]:
    if not getattr(args, 'vars', None):
        return None
    return [name.strip() for name in args.vars.split(',') if name.strip()]


def load_config(args) -> Config:
    return Config.load(args.config) if getattr(args, 'config', None) else Config.default()


def _emit(exporter: TreeExporter, text: str, target: str) -> None:
    if target == STDOUT:
        sys.stdout.write(text)
    else:
        exporter.write_text(text, Path(target))


def monomialize_command(args, config: Config) -> int:
    """Execute the monomialize command."""
    parsed = parse(args.expression, _variable_order(args))
    engine = Monomializer(config)
    result = engine.run(parsed.a_raw, parsed.b_raw, args.mode, parsed.rho)

    exporter = TreeExporter(config)
    if args.json:
        data = exporter.run_to_dict(result, parsed.variables, timestamps=args.timestamps)
        _emit(exporter, exporter.to_json_text(data), args.json)
    if args.dot:
        _emit(exporter, exporter.run_to_dot(result, parsed.variables), args.dot)

    if STDOUT not in (args.json, args.dot):
        print(
            f"mode={int(result.mode)} leaves={result.leaf_count} "
            f"total={result.total} depth={result.max_depth}"
        )
    return EXIT_OK


def compare_command(args, config: Config) -> int:
    """Execute the compare command."""
    parsed = parse(args.expression, _variable_order(args))
    results = Monomializer(config).compare(parsed.a_raw, parsed.b_raw, parsed.rho)

    exporter = TreeExporter(config)
    table = exporter.compare_table(results)
    print(table.to_string(index=False))
    if args.csv:
        exporter.write_csv(table, args.csv)
    return EXIT_OK


def batch_command(args, config: Config) -> int:
    """Execute the batch command."""
    if args.shipped:
        entries = [entry for name in SHIPPED_CORPORA for entry in shipped_corpus(name)]
    elif args.corpus is not None:
        if not args.corpus.exists():
            logging.error(f"Corpus file does not exist: {args.corpus}")
            return EXIT_FAILURE
        entries = load_corpus(args.corpus)
    else:
        logging.error("Give a corpus file or --shipped")
        return EXIT_FAILURE

    modes = [Mode.parse(m) for m in args.modes.split(',')] if args.modes else None
    report = CorpusRunner(config).run(entries, modes)

    tally = report.counts()
    print(
        f"rows={len(entries)} cells={len(report.outcomes)} passed={tally['pass']} "
        f"failed={tally['fail']} skipped={tally['skip']} recorded={tally['record']}"
    )
    for outcome in report.mismatches:
        print(outcome.mismatch_line)

    if args.csv:
        TreeExporter(config).write_csv(report.to_frame(), args.csv)

    if args.check and not report.passed:
        return EXIT_MISMATCH
    return EXIT_OK


def bounds_command(args, config: Config) -> int:
    """Execute the bounds command."""
    parsed = parse(args.expression, _variable_order(args))
    result = Monomializer(config).run(parsed.a_raw, parsed.b_raw, args.mode, parsed.rho)
    report = bound_report(result)

    if args.json:
        exporter = TreeExporter(config)
        text = json.dumps(report.to_dict(), indent=exporter.json_indent, sort_keys=True) + "\n"
        _emit(exporter, text, args.json)
    if args.json != STDOUT:
        print(
            f"mode={int(report.mode)} depth_bound={report.depth_bound} "
            f"chart_bound={report.chart_bound} depth={report.depth_actual} "
            f"total={report.total_actual} applicable={str(report.bound_applicable).lower()}"
        )
    return EXIT_OK


def _permutation(order: Optional[str], size: int) -> List[int]:
    if not order:
        return list(range(size))
    try:
        positions = [int(item) - 1 for item in order.split(',')]
    except ValueError:
        raise ValueError(f"--order must list integers, got {order!r}")
    if sorted(positions) != list(range(size)):
        raise ValueError(f"--order must be a permutation of 1..{size}, got {order!r}")
    return positions


def sequence_command(args, config: Config) -> int:
    """Execute the sequence command."""
    parsed = parse_system(args.expressions, _variable_order(args))
    if len(parsed) > 1 and _variable_order(args) is None:
        free = [name for name in parsed[0].variables if not INDEXED_NAME.fullmatch(name)]
        if free:
            logging.warning(
                f"Slots of {','.join(free)} follow first appearance; pass --vars to fix the order"
            )
    try:
        order = _permutation(args.order, len(parsed))
    except ValueError as e:
        logging.error(str(e))
        return EXIT_FAILURE

    mode = args.mode if args.mode is not None else Mode.parse(config.get('engine.default_mode', 2))
    binomials = [RawBinomial(parsed[k].a_raw, parsed[k].b_raw, parsed[k].rho) for k in order]
    result = sequential_monomialize(binomials, mode)
    variables = parsed[0].variables

    exporter = TreeExporter(config)
    if args.json:
        data = exporter.sequence_to_dict(result, variables, timestamps=args.timestamps)
        _emit(exporter, exporter.to_json_text(data), args.json)
    if args.dot:
        _emit(exporter, exporter.sequence_to_dot(result, variables), args.dot)

    if STDOUT not in (args.json, args.dot):
        stats = result.stats
        order_text = ",".join(str(k + 1) for k in order)
        print(
            f"mode={int(mode)} order={order_text} final={stats['final']} total={stats['total']} "
            f"leaves={stats['leaves']} depth={stats['max_depth']}"
        )
    return EXIT_OK


def verify_command(args, config: Config) -> int:
    """Execute the verify command."""
    suite = PropertySuite(config, seed=args.seed)
    reports = [suite.check_edges(args.samples), suite.check_runs(args.runs)]
    totals = summarize(reports)
    print(
        f"samples={totals['samples']} edges={totals['edges']} runs={totals['runs']} "
        f"violations={totals['violations']}"
    )
    for report in reports:
        for violation in report.violations:
            print(violation)
    return EXIT_OK if totals['violations'] == 0 else EXIT_ENGINE


COMMANDS = {
    "monomialize": monomialize_command,
    "run": monomialize_command,
    "compare": compare_command,
    "batch": batch_command,
    "bounds": bounds_command,
    "sequence": sequence_command,
    "verify": verify_command,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main CLI entry point."""
    parser = create_parser()
    args = parser.parse_args(argv)

    setup_logging(level=logging.INFO)

    if not args.command:
        parser.print_help()
        return EXIT_FAILURE

    try:
        config = load_config(args)
    except (FileNotFoundError, RuntimeError) as e:
        logging.error(str(e))
        return EXIT_FAILURE

    configure_from_config(config.get('logging', {}), verbose=args.verbose)

    try:
        return COMMANDS[args.command](args, config)
    except ParseError as e:
        logging.error(f"Parse error: {e}")
        return EXIT_PARSE
    except EngineError as e:
        logging.error(f"Engine error: {e}")
        return EXIT_ENGINE
    except CorpusFormatError as e:
        logging.error(f"Corpus error: {e}")
        return EXIT_FAILURE
    except OSError as e:
        logging.error(f"I/O error: {e}")
        return EXIT_FAILURE
    except Exception as e:
        logging.exception(f"Unexpected error during {args.command}: {e}")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())

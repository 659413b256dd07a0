"""
Tests for the command line interface
"""

import json
import tempfile
from pathlib import Path

import pandas as pd
import pytest

from monoforge.core.corpus import SHIPPED_CORPORA, shipped_corpus
from monoforge.main import (
    EXIT_ENGINE,
    EXIT_FAILURE,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_PARSE,
    create_parser,
    main,
)


class TestCreateParser:
    """Test cases for argument parsing."""

    def test_monomialize_arguments(self):
        """Test mode and output options."""
        args = create_parser().parse_args(["monomialize", "x1 - x2", "--mode", "codim2", "--json"])

        assert args.command == "monomialize"
        assert int(args.mode) == 2
        assert args.json == "-"
        assert args.dot is None

    def test_run_alias(self):
        """Test the short alias."""
        assert create_parser().parse_args(["run", "x1 - x2"]).command == "run"

    def test_invalid_mode(self):
        """Test that argparse rejects unknown modes."""
        with pytest.raises(SystemExit):
            create_parser().parse_args(["monomialize", "x1 - x2", "--mode", "7"])


class TestMain:
    """Test cases for running commands through main()."""

    def setup_method(self):
        """Set up test fixtures."""
        self.temp_dir = tempfile.TemporaryDirectory()
        self.work_dir = Path(self.temp_dir.name)

    def teardown_method(self):
        """Clean up test fixtures."""
        self.temp_dir.cleanup()

    def test_no_command(self, capsys):
        """Test that a bare call prints help."""
        assert main([]) == EXIT_FAILURE
        assert "usage" in capsys.readouterr().out

    def test_monomialize_summary(self, capsys):
        """Test x1*x2 - x3*x4*x5 with codimension-two centers."""
        assert main(["monomialize", "x1*x2-x3*x4*x5", "--mode", "2"]) == EXIT_OK
        assert "mode=2 leaves=3 total=5 " in capsys.readouterr().out

    def test_monomialize_finished(self, capsys):
        """Test an input that is already monomial."""
        assert main(["monomialize", "x1-x2*x3", "--mode", "3"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "mode=3 leaves=1 total=1 depth=0"

    def test_monomialize_maxord(self, capsys):
        """Test x1*x2^2 - x3*x4^2 with maximal-order centers."""
        assert main(["run", "x1*x2^2-x3*x4^2", "-m", "1"]) == EXIT_OK
        assert "leaves=6 total=9" in capsys.readouterr().out

    def test_monomialize_json_stdout(self, capsys):
        """Test that JSON on stdout is the only stdout output."""
        assert main(["monomialize", "y^2 - x^3", "--vars", "x,y", "--mode", "2", "--json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)

        assert data['stats']['total'] == 7
        assert data['variables'] == ['x', 'y']

    def test_monomialize_files(self, capsys):
        """Test writing JSON and DOT files."""
        json_path = self.work_dir / "tree.json"
        dot_path = self.work_dir / "tree.dot"
        code = main([
            "monomialize", "x1*x2 - x3*x4", "--mode", "1",
            "--json", str(json_path), "--dot", str(dot_path),
        ])

        assert code == EXIT_OK
        assert json.loads(json_path.read_text())['stats']['leaves'] == 4
        assert dot_path.read_text().startswith("digraph blowup_tree {")
        assert "leaves=4 total=5" in capsys.readouterr().out

    def test_parse_error(self):
        """Test the exit code for malformed input."""
        assert main(["monomialize", "x1*x2"]) == EXIT_PARSE
        assert main(["monomialize", "x1 - x2^0"]) == EXIT_PARSE
        assert main(["monomialize", "x1 - 1/0*x2"]) == EXIT_PARSE

    def test_engine_error(self):
        """Test the exit code for an identically zero binomial."""
        assert main(["monomialize", "x1 - x1"]) == EXIT_ENGINE

    def test_missing_config(self):
        """Test an unreadable configuration file."""
        assert main(["monomialize", "x1 - x2", "--config", str(self.work_dir / "nope.json")]) == EXIT_FAILURE

    def test_config_default_mode(self, capsys):
        """Test that the configured default mode is used."""
        path = self.work_dir / "config.json"
        path.write_text(json.dumps({'engine': {'default_mode': 1}}), encoding='utf-8')

        assert main(["monomialize", "x1*x2 - x3*x4", "-c", str(path)]) == EXIT_OK
        assert capsys.readouterr().out.startswith("mode=1 leaves=4 total=5")

    def test_compare(self, capsys):
        """Test x1^2 - x2^2*x3 under all strategies."""
        csv_path = self.work_dir / "compare.csv"
        assert main(["compare", "x1^2-x2^2*x3", "--csv", str(csv_path)]) == EXIT_OK

        out = capsys.readouterr().out
        assert "codim.2" in out
        frame = pd.read_csv(csv_path)
        assert list(frame['leaves']) == [2, 2, 2, 2]
        assert list(frame['total']) == [3, 3, 3, 3]

    def test_compare_trivial(self):
        """Test x1 - x2."""
        csv_path = self.work_dir / "trivial.csv"
        assert main(["compare", "x1-x2", "--csv", str(csv_path)]) == EXIT_OK
        assert list(pd.read_csv(csv_path)['total']) == [1, 1, 1, 1]

    def test_bounds(self, capsys):
        """Test the bounds of x1*x2 - x3*x4 with maximal-order centers."""
        assert main(["bounds", "x1*x2-x3*x4", "--mode", "1"]) == EXIT_OK
        out = capsys.readouterr().out

        assert "depth_bound=3 chart_bound=64" in out
        assert "applicable=true" in out

    def test_bounds_json(self, capsys):
        """Test the bounds report as JSON."""
        assert main(["bounds", "x1*x2-x3*x4", "--mode", "2", "--json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)

        assert data['depth_bound'] == 5
        assert data['bound_applicable'] is False

    def test_sequence_orders(self, capsys):
        """Test both orders of the two-binomial example."""
        expressions = ["v^2-y^4*z", "x^2*y-z^3"]
        assert main(["sequence", *expressions, "--vars", "x,y,z,v", "--mode", "2"]) == EXIT_OK
        assert "mode=2 order=1,2 final=19 total=43" in capsys.readouterr().out

        assert main(["sequence", *expressions, "--vars", "x,y,z,v", "--mode", "2", "--order", "2,1"]) == EXIT_OK
        assert "mode=2 order=2,1 final=12 total=31" in capsys.readouterr().out

    def test_sequence_without_vars(self, capsys):
        """Test first-appearance slots and the warning about them."""
        assert main(["sequence", "v^2-y^4*z", "x^2*y-z^3", "--mode", "2"]) == EXIT_OK
        captured = capsys.readouterr()

        assert "mode=2 order=1,2 final=21 total=49" in captured.out
        assert "Slots of v,y,z,x follow first appearance" in captured.err

    def test_sequence_indexed_names_no_warning(self, capsys):
        """Test that x1, x2, ... need no --vars."""
        assert main(["sequence", "x1-x2", "x1-x3", "--mode", "2"]) == EXIT_OK
        assert "--vars" not in capsys.readouterr().err

    def test_sequence_bad_order(self):
        """Test an --order that is not a permutation."""
        assert main(["sequence", "x1-x2", "x1-x3", "--order", "1,1"]) == EXIT_FAILURE

    def test_batch_empty_corpus(self, capsys):
        """Test that an empty corpus passes."""
        path = self.work_dir / "empty.corpus"
        path.write_text("# nothing here\n", encoding='utf-8')

        assert main(["batch", str(path), "--check"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("rows=0 cells=0 passed=0 failed=0")

    def test_batch_mismatch(self, capsys):
        """Test that a wrong expectation fails the check."""
        path = self.work_dir / "wrong.corpus"
        path.write_text(
            "1: x1*x2 - x3*x4 ; mode1=4/5 ; mode2=2/4\n", encoding='utf-8'
        )

        assert main(["batch", str(path), "--check"]) == EXIT_MISMATCH
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "rows=1 cells=2 passed=1 failed=1 skipped=0 recorded=0"
        assert lines[1:] == ["1, 2, 2/4, 2/3"]

    def test_batch_mismatch_without_check(self):
        """Test that mismatches only fail with --check."""
        path = self.work_dir / "wrong.corpus"
        path.write_text("x1*x2 - x3*x4 ; mode2=2/4\n", encoding='utf-8')

        assert main(["batch", str(path)]) == EXIT_OK

    def test_batch_csv(self):
        """Test the CSV report."""
        path = self.work_dir / "small.corpus"
        path.write_text("x1*x2 - x3*x4 ; mode2=2/3\n", encoding='utf-8')
        csv_path = self.work_dir / "report.csv"

        assert main(["batch", str(path), "--csv", str(csv_path)]) == EXIT_OK
        assert list(pd.read_csv(csv_path)['status']) == ['pass']

    def test_batch_bad_corpus(self):
        """Test a malformed corpus file."""
        path = self.work_dir / "bad.corpus"
        path.write_text("x1*x2 - x3*x4 ; mode9=1/1\n", encoding='utf-8')

        assert main(["batch", str(path)]) == EXIT_FAILURE

    def test_batch_missing_file(self):
        """Test a corpus path that does not exist."""
        assert main(["batch", str(self.work_dir / "absent.corpus")]) == EXIT_FAILURE

    def test_verify(self, capsys):
        """Test a small invariant check."""
        assert main(["verify", "--samples", "50", "--runs", "5", "--seed", "2"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("samples=55 edges=200 runs=20 violations=0")


CORPUS_EXPRESSIONS = sorted({entry.expression for name in SHIPPED_CORPORA for entry in shipped_corpus(name)})


@pytest.mark.slow
@pytest.mark.integration
class TestJsonStability:
    """Test cases for repeatable JSON output."""

    @pytest.mark.parametrize("expression", CORPUS_EXPRESSIONS)
    def test_reference_rows_byte_identical(self, expression, capsys):
        """Test that two --json runs of a reference row print the same bytes."""
        assert main(["monomialize", expression, "--mode", "2", "--json"]) == EXIT_OK
        first = capsys.readouterr().out
        assert main(["monomialize", expression, "--mode", "2", "--json"]) == EXIT_OK
        second = capsys.readouterr().out

        assert first
        assert first == second


if __name__ == "__main__":
    pytest.main([__file__])

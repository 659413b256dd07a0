"""
Tests for sequential monomialization of several binomials
"""

import pytest

from monoforge.core.engine import Mode, monomialize
from monoforge.core.errors import DegenerateZero, DimensionMismatch
from monoforge.core.multirun import RawBinomial, sequential_monomialize
from monoforge.core.parser import parse_system

VARIABLES = ["x", "y", "z", "v"]


def binomials(*expressions):
    return [RawBinomial(p.a_raw, p.b_raw, p.rho) for p in parse_system(expressions, VARIABLES)]


class TestSequentialMonomialize:
    """Test cases for running binomials one after another."""

    def setup_method(self):
        """Set up f1 = v^2 - y^4*z and f2 = x^2*y - z^3."""
        self.f1 = "v^2 - y^4*z"
        self.f2 = "x^2*y - z^3"

    def test_first_order(self):
        """Test the order (f1, f2)."""
        result = sequential_monomialize(binomials(self.f1, self.f2), Mode.CODIM2)

        assert result.stats['total'] == 43
        assert result.stats['final'] == 19

    def test_reversed_order(self):
        """Test the order (f2, f1)."""
        result = sequential_monomialize(binomials(self.f2, self.f1), Mode.CODIM2)

        assert result.stats['total'] == 31
        assert result.stats['final'] == 12

    def test_final_charts_are_leaves(self):
        """Test that only leaves can be final and that every leaf has finished its phase."""
        result = sequential_monomialize(binomials(self.f1, self.f2), Mode.CODIM2)

        for chart in result.charts:
            if chart.final:
                assert chart.is_leaf
            if chart.is_leaf:
                assert chart.active_index == 2
        assert result.stats['leaves'] >= result.stats['final']

    def test_phases_never_go_back(self):
        """Test that a child never returns to an earlier binomial."""
        result = sequential_monomialize(binomials(self.f1, self.f2), Mode.CODIM2)

        for chart in result.charts[1:]:
            assert chart.active_index >= result.chart(chart.parent).active_index

    def test_single_binomial_matches_engine(self):
        """Test that a one-element list is an ordinary run."""
        sequence = sequential_monomialize(binomials(self.f2), Mode.CODIM2)
        f2 = binomials(self.f2)[0]
        single = monomialize(f2.a_raw, f2.b_raw, Mode.CODIM2, f2.rho)

        assert sequence.stats['total'] == single.total
        assert sequence.stats['leaves'] == single.leaf_count
        assert sequence.stats['final'] == single.leaf_count
        assert sequence.stats['max_depth'] == single.max_depth
        assert [c.center for c in sequence.charts] == [c.center for c in single.charts]

    def test_states_per_chart(self):
        """Test that every chart carries one state per binomial."""
        result = sequential_monomialize(binomials(self.f1, self.f2), Mode.CODIM2)
        root_states = result.states(result.chart(1))

        assert len(root_states) == 2
        assert root_states[0].a == (0, 0, 0, 2)
        assert root_states[1].b == (0, 0, 3, 0)

    def test_path(self):
        """Test path reconstruction in a sequential run."""
        result = sequential_monomialize(binomials(self.f1, self.f2), Mode.CODIM2)
        leaf = result.leaves()[-1]
        path = result.path(leaf.index)

        assert path[0] == (0, -1)
        assert len(path) == leaf.depth + 1
        assert path[-1] == (leaf.parent, leaf.ordinal)

    def test_product_monomial_flag(self):
        """Test that the product check returns a flag on every leaf."""
        result = sequential_monomialize(binomials(self.f1, self.f2), Mode.CODIM2)
        flags = [result.product_monomial(chart) for chart in result.leaves()]

        assert all(isinstance(flag, bool) for flag in flags)

    def test_product_monomial_unit_bracket(self):
        """Test a unit bracket next to one finished bracket."""
        result = sequential_monomialize(
            [RawBinomial((1, 0), (1, 0), rho=2), RawBinomial((1, 0), (0, 1))], Mode.CODIM2
        )

        assert result.stats['total'] == 1
        assert result.product_monomial(result.chart(1))

    def test_product_monomial_two_brackets(self):
        """Test that two non-unit brackets are not a monomial."""
        result = sequential_monomialize(
            [RawBinomial((1, 0, 0), (0, 1, 0)), RawBinomial((0, 0, 1), (0, 1, 0))], Mode.CODIM2
        )

        assert result.stats['total'] == 1
        assert not result.product_monomial(result.chart(1))

    def test_empty_list(self):
        """Test that an empty list is rejected."""
        with pytest.raises(ValueError):
            sequential_monomialize([], Mode.CODIM2)

    def test_dimension_mismatch(self):
        """Test binomials in different variable spaces."""
        with pytest.raises(DimensionMismatch):
            sequential_monomialize(
                [RawBinomial((1, 0), (0, 1)), RawBinomial((1, 0, 0), (0, 1, 1))], Mode.CODIM2
            )

    def test_degenerate_member(self):
        """Test that an identically zero binomial is rejected."""
        with pytest.raises(DegenerateZero):
            sequential_monomialize(
                [RawBinomial((1, 0), (0, 2)), RawBinomial((1, 1), (1, 1))], Mode.CODIM2
            )


if __name__ == "__main__":
    pytest.main([__file__])

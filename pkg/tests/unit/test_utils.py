"""Test formatting and parsing helpers"""

from fractions import Fraction

import pytest

from subblock_bounds.types import InvalidParameterError
from subblock_bounds.utils import (
    format_decimal,
    format_exact,
    parse_delta_range,
    parse_fraction,
    parse_int_list,
    snake_to_camel,
)


class TestFormatting:
    """Exact and truncated decimal renderings"""

    @pytest.mark.unit
    def test_snake_to_camel(self):
        assert snake_to_camel("primal_value") == "primalValue"
        assert snake_to_camel("m0") == "m0"

    @pytest.mark.unit
    def test_format_exact(self):
        assert format_exact(Fraction(4000752, 19)) == "4000752/19"
        assert format_exact(Fraction(6, 3)) == "2"
        assert format_exact(7) == "7"

    @pytest.mark.unit
    def test_format_decimal_truncates(self):
        assert format_decimal(Fraction(4000752, 19)) == "210565.894"
        assert format_decimal(Fraction(83, 2)) == "41.5"
        assert format_decimal(Fraction(2, 3)) == "0.666"
        assert format_decimal(Fraction(2, 3), places=5) == "0.66666"
        assert format_decimal(2) == "2"
        assert format_decimal(Fraction(1, 10000)) == "0"

    @pytest.mark.unit
    def test_format_decimal_signs_and_places(self):
        assert format_decimal(Fraction(-2, 3)) == "-0.666"
        assert format_decimal(Fraction(-1, 10000)) == "0"
        assert format_decimal(Fraction(7, 2), places=0) == "3"
        with pytest.raises(InvalidParameterError):
            format_decimal(1, places=-1)


class TestParsing:
    """Command-line value parsers"""

    @pytest.mark.unit
    def test_parse_fraction(self):
        assert parse_fraction("0.005") == Fraction(1, 200)
        assert parse_fraction(" 1/40 ") == Fraction(1, 40)
        assert parse_fraction("3") == 3
        with pytest.raises(InvalidParameterError):
            parse_fraction("x")
        with pytest.raises(InvalidParameterError):
            parse_fraction("1/0")

    @pytest.mark.unit
    def test_delta_range_is_exact_and_inclusive(self):
        grid = parse_delta_range("0.11:0.29:0.005")
        assert len(grid) == 37
        assert grid[0] == Fraction(11, 100)
        assert grid[-1] == Fraction(29, 100)

    @pytest.mark.unit
    def test_delta_range_edges(self):
        assert parse_delta_range("0.3:0.2:0.01") == []
        assert parse_delta_range("0.2:0.2:0.01") == [Fraction(1, 5)]
        with pytest.raises(InvalidParameterError):
            parse_delta_range("0.1:0.2")
        with pytest.raises(InvalidParameterError):
            parse_delta_range("0.1:0.2:0")

    @pytest.mark.unit
    def test_parse_int_list(self):
        assert parse_int_list("10,14") == [10, 14]
        assert parse_int_list("5") == [5]
        with pytest.raises(InvalidParameterError):
            parse_int_list("a,b")
        with pytest.raises(InvalidParameterError):
            parse_int_list(",")

"""Parsing and printing of bivariate polynomials."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qhgerm import (
    BivarPoly,
    EmptyInputError,
    NegativeExponentError,
    ParseError,
    X,
    Y,
    format_poly,
    gq,
    parse_poly,
)
from qhgerm.polyio import MODE_EXACT, MODE_NUMERIC, poly_to_json_dict

fractions = st.fractions(min_value=-9, max_value=9, max_denominator=10)
scalars = st.builds(gq, fractions, fractions)
exponents = st.tuples(
    st.integers(min_value=0, max_value=5), st.integers(min_value=0, max_value=5)
)
polys = st.dictionaries(exponents, scalars, min_size=0, max_size=5).map(
    BivarPoly.from_terms
)


class TestParsing:
    def test_difference_of_powers(self):
        poly = parse_poly("Y^2 - X^3")
        assert poly.terms == {(0, 2): gq(1), (3, 0): gq(-1)}

    def test_product_expansion(self):
        poly = parse_poly("(Y^2-X^3)*(Y^2-2*X^3)")
        assert poly == parse_poly("Y^4 - 3*X^3*Y^2 + 2*X^6")

    def test_power_of_parenthesized(self):
        assert parse_poly("(Y-X^2)^3") == parse_poly(
            "Y^3 - 3*X^2*Y^2 + 3*X^4*Y - X^6"
        )

    def test_fractional_coefficient(self):
        poly = parse_poly("3/4*X*Y")
        assert poly.coeff(1, 1) == gq(Fraction(3, 4))

    def test_imaginary_unit(self):
        assert parse_poly("i*X*Y").coeff(1, 1) == gq(0, 1)
        assert parse_poly("3*i*X").coeff(1, 0) == gq(0, 3)
        assert parse_poly("2i*Y").coeff(0, 1) == gq(0, 2)

    def test_digit_symbol_juxtaposition(self):
        assert parse_poly("2X") == parse_poly("2*X")

    def test_unary_signs(self):
        assert parse_poly("-X^2 + Y") == parse_poly("Y - X^2")
        assert parse_poly("+Y") == parse_poly("Y")

    def test_repeated_difference(self):
        poly = parse_poly("X - Y - X")
        assert poly == parse_poly("-Y")

    def test_whitespace_insensitive(self):
        assert parse_poly("  Y ^ 2-X ^ 3 ") == parse_poly("Y^2 - X^3")


class TestParseErrors:
    def test_empty_input(self):
        with pytest.raises(EmptyInputError):
            parse_poly("   ")

    def test_negative_exponent(self):
        with pytest.raises(NegativeExponentError):
            parse_poly("X^-2")

    def test_trailing_operator(self):
        with pytest.raises(ParseError):
            parse_poly("X +")

    def test_unbalanced_parenthesis(self):
        with pytest.raises(ParseError):
            parse_poly("(Y - X")

    def test_stray_character(self):
        with pytest.raises(ParseError):
            parse_poly("Y^2 - Z")

    def test_adjacent_symbols_rejected(self):
        for bad in ("X Y", "X^2Y", "(Y-X)(Y+X)", "2(X+Y)"):
            with pytest.raises(ParseError):
                parse_poly(bad)

    def test_zero_denominator(self):
        with pytest.raises(ParseError):
            parse_poly("1/0*X")

    def test_error_carries_position(self):
        with pytest.raises(ParseError) as err:
            parse_poly("X @ Y")
        assert err.value.position == 2

    def test_double_caret(self):
        with pytest.raises(ParseError):
            parse_poly("X^^2")


class TestModes:
    def test_exact_by_default(self):
        assert parse_poly("Y^2 - X^3").mode == MODE_EXACT

    def test_decimal_literal_marks_numeric(self):
        poly = parse_poly("0.5*X")
        assert poly.mode == MODE_NUMERIC
        assert poly.coeff(1, 0) == gq(Fraction(1, 2))

    def test_decimal_value_is_exact_base_ten(self):
        assert parse_poly("0.125*Y").coeff(0, 1) == gq(Fraction(1, 8))

    def test_mode_is_contagious_through_arithmetic(self):
        mixed = parse_poly("0.5*X") + parse_poly("Y")
        assert mixed.mode == MODE_NUMERIC


class TestPrinting:
    def test_x_ascending_order(self):
        poly = parse_poly("2*X^3*Y + X*Y^3 - 3*X^2*Y^2")
        assert format_poly(poly) == "X*Y^3 - 3*X^2*Y^2 + 2*X^3*Y"

    def test_leading_negative(self):
        assert format_poly(parse_poly("-X^3 + Y^2")) == "Y^2 - X^3"

    def test_unit_coefficients_suppressed(self):
        assert format_poly(parse_poly("X + Y")) == "Y + X"

    def test_complex_coefficient_parenthesized(self):
        assert format_poly(parse_poly("i*X*Y - 3*Y^2")) == "-3*Y^2 + (0+1i)*X*Y"

    def test_zero(self):
        assert format_poly(BivarPoly.zero()) == "0"

    def test_constant(self):
        assert format_poly(parse_poly("5/3")) == "5/3"

    @given(polys)
    def test_round_trip(self, poly):
        assert parse_poly(format_poly(poly)) == poly


class TestArithmetic:
    @given(polys, polys, scalars, scalars)
    def test_product_evaluates_pointwise(self, f, g, x, y):
        assert (f * g).evaluate(x, y) == f.evaluate(x, y) * g.evaluate(x, y)

    @given(polys, polys, scalars, scalars)
    def test_sum_evaluates_pointwise(self, f, g, x, y):
        assert (f + g).evaluate(x, y) == f.evaluate(x, y) + g.evaluate(x, y)

    @given(polys)
    def test_substituting_the_identity(self, f):
        assert f.substitute(X, Y) == f

    @given(polys, scalars, scalars)
    def test_substituting_constants_evaluates(self, f, x, y):
        image = f.substitute(BivarPoly.constant(x), BivarPoly.constant(y))
        value = f.evaluate(x, y)
        if value.is_zero:
            assert image.is_zero
        else:
            assert image == BivarPoly.constant(value)

    def test_pow_repeated_product(self):
        f = parse_poly("X + Y")
        assert f**3 == f * f * f

    def test_scale(self):
        assert X.scale(gq(3)) == parse_poly("3*X")


class TestJson:
    def test_shape_and_order(self):
        doc = poly_to_json_dict(parse_poly("Y^2 - X^3"))
        assert doc["mode"] == "exact"
        assert doc["terms"] == [
            {"i": 0, "j": 2, "re": "1", "im": "0"},
            {"i": 3, "j": 0, "re": "-1", "im": "0"},
        ]

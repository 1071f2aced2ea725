from fractions import Fraction

import pytest

from phasecat import ParseError, PolyGerm, ValidationError, parse_germ

F = Fraction


class TestParse:
    def test_e6_normal_form(self):
        g = parse_germ("x^3 + y^4")
        assert g.variable_count == 2
        assert g.term_dict == {(3, 0): F(1), (0, 4): F(1)}

    def test_d_series_shape(self):
        g = parse_germ("x^2*y + y^4")
        assert g.term_dict == {(2, 1): F(1), (0, 4): F(1)}

    def test_rational_coefficients(self):
        g = parse_germ("1/2*x^2 - 3/4*x*y")
        assert g.term_dict == {(2, 0): F(1, 2), (1, 1): F(-3, 4)}

    def test_three_variables(self):
        g = parse_germ("x*y*z + z^2")
        assert g.variable_count == 3
        assert g.term_dict == {(1, 1, 1): F(1), (0, 0, 2): F(1)}

    def test_whitespace_insensitive(self):
        assert parse_germ("x^3+y^4") == parse_germ("  x^3   + y^4 ")

    def test_parentheses_and_cancellation(self):
        g = parse_germ("(x + y)^2 - 2*x*y")
        assert g.term_dict == {(2, 0): F(1), (0, 2): F(1)}

    def test_leading_minus(self):
        g = parse_germ("-x^2 + y^3")
        assert g.term_dict == {(2, 0): F(-1), (0, 3): F(1)}

    def test_deterministic_term_order(self):
        a = parse_germ("y^4 + x^3")
        b = parse_germ("x^3 + y^4")
        assert a.terms == b.terms

    def test_unused_leading_variable_kept_by_position(self):
        # y alone still lives in a two-variable ring
        g = parse_germ("y^2")
        assert g.variable_count == 2
        assert g.term_dict == {(0, 2): F(1)}


class TestParseErrors:
    def test_constant_term_rejected(self):
        with pytest.raises(ValidationError, match="constant term"):
            parse_germ("x + 1")

    def test_unknown_character_with_position(self):
        with pytest.raises(ParseError) as exc:
            parse_germ("x^2 + w")
        assert exc.value.position == 6
        assert "position 6" in str(exc.value)

    def test_negative_exponent(self):
        with pytest.raises(ParseError, match="negative exponent"):
            parse_germ("x^-2")

    def test_missing_exponent(self):
        with pytest.raises(ParseError, match="exponent"):
            parse_germ("x^ + y")

    def test_unbalanced_paren(self):
        with pytest.raises(ParseError, match="'\\)'"):
            parse_germ("(x + y")

    def test_trailing_garbage(self):
        with pytest.raises(ParseError, match="trailing"):
            parse_germ("x^2 )")

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_germ("")

    def test_missing_denominator(self):
        with pytest.raises(ParseError, match="denominator"):
            parse_germ("1/x")


class TestPolyGerm:
    def test_rejects_constant(self):
        with pytest.raises(ValidationError):
            PolyGerm(1, (((0,), F(1)),))

    def test_rejects_negative_exponent(self):
        with pytest.raises(ValidationError):
            PolyGerm(1, (((-1,), F(1)),))

    def test_rejects_too_many_variables(self):
        with pytest.raises(ValidationError):
            PolyGerm(4, ())

    def test_like_terms_merged(self):
        g = PolyGerm(1, (((2,), F(1)), ((2,), F(2))))
        assert g.term_dict == {(2,): F(3)}

    def test_max_degree(self):
        assert parse_germ("x^3 + y^4").max_degree() == 4
        assert parse_germ("x").max_degree() == 1

    def test_derivative(self):
        g = parse_germ("x^3 + x*y^2")
        assert g.derivative(0) == {(2, 0): F(3), (0, 2): F(1)}
        assert g.derivative(1) == {(1, 1): F(2)}

    def test_derivative_of_independent_variable(self):
        assert parse_germ("y^2").derivative(0) == {}

    def test_str_round_trip(self):
        for text in ("x^3 + y^4", "x^2*y - y^4", "1/2*x^2",
                     "-x + y^2", "x*y*z + z^3"):
            g = parse_germ(text)
            assert parse_germ(str(g)) == g

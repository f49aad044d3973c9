from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from psrewrite import (
    BACKWARD,
    FORWARD,
    Conversion,
    Monomial,
    ParseError,
    TruncatedSeries,
    format_conversion,
    format_monomial,
    format_series,
    format_trace,
    normalize,
    parse_ars_system,
    parse_conversion,
    parse_rules,
    parse_series,
)

N = 2
Y = Monomial((0, 1))


class TestParseSeries:
    def test_plain_polynomial(self):
        f = parse_series("x2 - x2^2", N)
        assert f.coefficient(Y) == 1
        assert f.coefficient(Monomial((0, 2))) == -1
        assert f.is_exact

    def test_rational_coefficient_and_precision(self):
        f = parse_series("3/2*x1^2*x2 + O(4)", N)
        assert f.coefficient(Monomial((2, 1))) == Fraction(3, 2)
        assert f.precision == 4

    def test_bare_precision(self):
        f = parse_series("O(0)", N)
        assert f.known_zero() and f.precision == 0

    def test_zero(self):
        f = parse_series("0", N)
        assert f.is_exactly_zero()

    def test_leading_minus_and_constants(self):
        f = parse_series("-2 + 1/3*x1", N)
        assert f.coefficient(Monomial.one(N)) == -2
        assert f.coefficient(Monomial((1, 0))) == Fraction(1, 3)

    def test_like_terms_collected(self):
        assert parse_series("x2 + x2", N) == parse_series("2*x2", N)

    def test_terms_beyond_precision_absorbed(self):
        assert parse_series("x1^5 + O(2)", N) == TruncatedSeries.zero(N, 2)

    def test_repeated_variable_factors(self):
        assert parse_series("x1*x1^2", N) == parse_series("x1^3", N)

    def test_unknown_variable(self):
        with pytest.raises(ParseError, match="unknown variable x3"):
            parse_series("x3", N)

    def test_zero_denominator(self):
        with pytest.raises(ParseError, match="zero denominator"):
            parse_series("1/0*x1", N)

    def test_syntax_error_position(self):
        with pytest.raises(ParseError) as err:
            parse_series("x1 + ?", N)
        assert err.value.line == 1 and err.value.column == 6

    def test_precision_must_be_last(self):
        with pytest.raises(ParseError, match="last"):
            parse_series("O(3) + x1", N)

    def test_precision_cannot_be_negative_addend(self):
        with pytest.raises(ParseError, match="subtracted"):
            parse_series("x1 - O(3)", N)

    def test_empty(self):
        with pytest.raises(ParseError, match="empty"):
            parse_series("   ", N)


class TestFormatSeries:
    def test_canonical_examples(self):
        assert format_series(parse_series("x2 - x2^2", N)) == "x2 - x2^2"
        assert format_series(parse_series("3/2*x1^2*x2 + O(4)", N)) == "3/2*x1^2*x2 + O(4)"
        assert format_series(TruncatedSeries.zero(N)) == "0"
        assert format_series(TruncatedSeries.zero(N, 3)) == "O(3)"
        assert format_series(parse_series("-x1 + 2", N)) == "2 - x1"

    def test_monomial_form(self):
        assert format_monomial(Monomial((2, 1))) == "x1^2*x2"
        assert format_monomial(Monomial.one(N)) == "1"


coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=6)
monomials = st.tuples(st.integers(0, 4), st.integers(0, 4)).map(Monomial)
series = st.builds(
    lambda d, p: TruncatedSeries(N, d, p),
    st.dictionaries(monomials, coefficients, max_size=5),
    st.one_of(st.none(), st.integers(0, 8)))


@given(series)
def test_round_trip(f):
    assert parse_series(format_series(f), N) == f


@given(st.text(alphabet="x12 +-*/^O()", max_size=40))
def test_series_parser_is_total(text):
    # arbitrary input either parses or raises ParseError, nothing else
    try:
        parse_series(text, N)
    except ParseError:
        pass


@given(st.text(alphabet="01234 ><-=n\n", max_size=40))
def test_system_parser_is_total(text):
    try:
        parse_ars_system(text)
    except ParseError:
        pass


@given(st.text(alphabet="012 -><", max_size=30))
def test_conversion_parser_is_total(text):
    try:
        parse_conversion(text)
    except ParseError:
        pass


class TestRuleFiles:
    def test_line_order_fixes_indices(self):
        rules = parse_rules("x1 + x2\n\nx1 - x2\n", N)
        assert len(rules) == 2
        assert rules.rule(1).body == parse_series("x1 + x2", N)
        assert rules.rule(2).body == parse_series("x1 - x2", N)

    def test_error_carries_line_number(self):
        with pytest.raises(ParseError) as err:
            parse_rules("x1\nx9\n", N)
        assert err.value.line == 2


class TestTraceFormat:
    def test_line_records(self):
        rules = parse_rules("x2 - x2^2", N)
        trace = normalize(parse_series("x2", N), rules, 3)
        assert format_trace(trace) == [
            "step 1: M=x2 rule=1 m=1 c=1",
            "step 2: M=x2^2 rule=1 m=x2 c=1",
        ]


class TestArsFormats:
    def test_system_round_trip(self):
        sys = parse_ars_system("n=3\n0 -> 1\n1 -> 2\n")
        assert sys.size == 3 and sys.edges == frozenset({(0, 1), (1, 2)})

    def test_system_errors(self):
        with pytest.raises(ParseError):
            parse_ars_system("3\n0 -> 1\n")
        with pytest.raises(ParseError):
            parse_ars_system("n=2\n0 -> 5\n")

    def test_conversion_round_trip(self):
        conv = parse_conversion("0 <- 1 -> 2")
        assert conv == Conversion(0, ((1, BACKWARD), (2, FORWARD)))
        assert format_conversion(conv) == "0 <- 1 -> 2"

    def test_conversion_errors(self):
        with pytest.raises(ParseError):
            parse_conversion("0 => 1")
        with pytest.raises(ParseError):
            parse_conversion("0 ->")
